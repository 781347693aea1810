#ifndef FDTC_DEHORNOY_HPP
#define FDTC_DEHORNOY_HPP

#include "fdtc/braid.hpp"

namespace fdtc {

inline constexpr long long kDefaultReductionBudget = 10'000'000;

// sigma_positive: some freely reduced representative in which the generator
// of minimal index occurs only positively; sigma_negative: only negatively;
// trivial: the word represents the identity.
enum class SigmaClass { sigma_positive, sigma_negative, trivial };

enum class Order { less, equal, greater };

// Dehornoy handle reduction. A sigma_i handle is a subword
// sigma_i^e v sigma_i^{-e} whose interior v uses only indices > i; reducing
// it deletes the flanking letters and conjugates each sigma_{i+1}^d in v to
// sigma_{i+1}^{-e} sigma_i^d sigma_{i+1}^{e}. This always reduces the handle
// that closes leftmost, which can contain no nested handle and therefore
// makes the process terminate. The result is freely reduced and handle
// free, hence empty or sigma-definite. The budget caps the number of handle
// reductions and exists only to turn a nontermination bug into a clean
// error.
BraidWord handle_reduce(const BraidWord& w, long long budget = kDefaultReductionBudget);

SigmaClass sigma_class(const BraidWord& w, long long budget = kDefaultReductionBudget);

// Dehornoy's left-invariant total order: Less iff invert(a)*b is
// sigma-positive.
Order compare(const BraidWord& a, const BraidWord& b,
              long long budget = kDefaultReductionBudget);

// Word problem: does w represent the identity of the braid group.
bool is_trivial(const BraidWord& w, long long budget = kDefaultReductionBudget);

} // namespace fdtc

#endif
