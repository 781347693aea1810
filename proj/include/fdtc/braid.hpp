#ifndef FDTC_BRAID_HPP
#define FDTC_BRAID_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fdtc/errors.hpp"
#include "fdtc/permutation.hpp"

namespace fdtc {

// One Artin generator occurrence: sigma_index^sign with index in 1..n-1.
struct Letter {
    int index;
    int sign; // +1 or -1

    friend bool operator==(const Letter& a, const Letter& b) noexcept {
        return a.index == b.index && a.sign == b.sign;
    }
};

// A word in the braid group B_n on `strands` strands. The letter sequence is
// kept freely reduced at all times; equality of BraidWord is therefore word
// equality after free reduction, not equality in the group (see is_trivial).
class BraidWord {
public:
    BraidWord(int strands, std::vector<Letter> letters);

    static BraidWord identity(int strands) { return BraidWord(strands, {}); }

    int strands() const noexcept { return strands_; }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    bool empty() const noexcept { return letters_.empty(); }
    int size() const noexcept { return static_cast<int>(letters_.size()); }

    friend bool operator==(const BraidWord& a, const BraidWord& b) noexcept {
        return a.strands_ == b.strands_ && a.letters_ == b.letters_;
    }

private:
    int strands_;
    std::vector<Letter> letters_;
};

// Accepts whitespace-separated tokens in two interchangeable forms:
// "s3" / "-s3" or the signed integers "3" / "-3".
BraidWord parse_braid(const std::string& text, int strands);

std::string to_string(const BraidWord& w);

BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord invert(const BraidWord& w);
BraidWord power(const BraidWord& w, std::int64_t k);

// The full twist on n strands, (sigma_1 ... sigma_{n-1})^n. Generates the
// center of B_n and is the boundary Dehn twist of the disk open book.
BraidWord full_twist(int strands);

// Underlying permutation of strand endpoints (0-based).
Permutation strand_permutation(const BraidWord& w);

// Number of components of the closure (cycles of the strand permutation).
int component_count(const BraidWord& w);

std::int64_t exponent_sum(const BraidWord& w);

} // namespace fdtc

#endif
