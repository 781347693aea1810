#ifndef FDTC_COVER_HPP
#define FDTC_COVER_HPP

#include <utility>
#include <vector>

#include "fdtc/errors.hpp"
#include "fdtc/permutation.hpp"

namespace fdtc {

// Compact base surface with boundary, presented by free generators:
// ids 1..n are loops around the branch points, ids n+1..n+2g run over the
// genus handles. Boundary words list signed generator ids; the disk on n
// branch points has the single boundary word 1 2 ... n.
struct BaseSurface {
    int genus = 0;
    std::vector<std::vector<int>> boundary_words;
};

// A branched covering of the base surface given by its permutation
// monodromy on the sheets: one permutation of {1..degree} per branch loop
// and one per handle generator. Transitivity is connectedness of the cover.
struct MonodromyRep {
    int branch_points = 0;
    int degree = 0;
    std::vector<Permutation> branch_perms;
    std::vector<Permutation> handle_perms;
    BaseSurface base;
};

// Disk base, every branch loop mapped to the same d-cycle. This is the
// monodromy of the d-fold cyclic cover branched over n points, and it is
// always fully ramified.
MonodromyRep standard_cyclic(int branch_points, int degree);

// Structural validation (sizes, degrees, word ids). Throws input errors.
void validate(const MonodromyRep& rep);

bool is_transitive(const MonodromyRep& rep);

// Fully ramified: every branch loop permutation is fixed point free, i.e.
// every preimage of every branch point is genuinely ramified.
bool is_fully_ramified(const MonodromyRep& rep);

struct BoundaryComponent {
    int base_boundary;       // which base boundary it lies over (0-based)
    int component;           // 0-based id among components over that boundary
    int degree;              // covering degree of the restriction to circles
    std::vector<int> sheets; // 0-based sheets in the cycle, sorted
};

struct BranchPreimage {
    int branch_point;                  // 0-based
    int preimage_count;                // cycles of the branch permutation
    std::vector<int> ramification;     // cycle lengths, ascending
};

struct CoverGeometry {
    int euler_char = 0;
    int genus = 0;
    int total_degree = 0;
    int base_boundary_count = 0;
    std::vector<BoundaryComponent> boundaries;
    std::vector<BranchPreimage> branch_preimages;
};

// Riemann-Hurwitz bookkeeping for the covering surface. Throws NotConnected
// for intransitive monodromy and an input error when the boundary words are
// inconsistent with any orientable cover.
CoverGeometry cover_geometry(const MonodromyRep& rep);

// (number of boundary components, covering degree of each) for the cover of
// the disk boundary in standard_cyclic(n, d): the boundary word maps to the
// n-th power of a d-cycle, giving gcd(n, d) circles of degree d/gcd(n, d).
std::pair<int, int> boundary_connectivity(int branch_points, int degree);

} // namespace fdtc

#endif
