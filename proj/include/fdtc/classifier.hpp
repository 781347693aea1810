#ifndef FDTC_CLASSIFIER_HPP
#define FDTC_CLASSIFIER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fdtc/cover.hpp"
#include "fdtc/fdtc.hpp"

namespace fdtc {

enum class GeometryType { hyperbolic, toroidal, seifert_fibered };
enum class NielsenThurston { periodic, reducible, pseudo_anosov };

// Boundary twisting of a pseudo-Anosov map written as k/p with p the number
// of prongs of the invariant foliation at that boundary.
struct ProngDatum {
    std::int64_t k;
    std::int64_t p;
};

// Facts the engine cannot compute from the braid word alone. Everything is
// optional; a missing fact leaves the hypotheses that need it Unknown.
struct Assertions {
    std::optional<GeometryType> base_geometry;
    std::optional<NielsenThurston> nielsen_thurston;
    std::optional<std::vector<ProngDatum>> prongs;
    std::optional<bool> is_l_space; // recorded for the report, consumed by no rule
};

enum class HypothesisStatus { satisfied, violated, unknown };
enum class VerdictStatus { proved, refuted, inconclusive };

struct Hypothesis {
    std::string condition;
    HypothesisStatus status;
};

struct Verdict {
    std::string rule_id;
    std::string conclusion;
    VerdictStatus status;
    std::vector<Hypothesis> hypotheses;
    std::vector<std::string> notes;
};

// The only way rules build verdicts: Proved exactly when every hypothesis
// is Satisfied, Inconclusive otherwise. Keeping status derived makes an
// unsound verdict unrepresentable by construction.
Verdict make_verdict(std::string rule_id, std::string conclusion,
                     std::vector<Hypothesis> hypotheses,
                     std::vector<std::string> notes = {});

// Geometry type passes from the base manifold to the cover when the
// twisting beats the covering degree: either both boundaries are connected
// and |c| exceeds the total degree, or |c| exceeds 4 times the boundary
// covering degree for every pair of boundary components.
Verdict rule_geometry_transfer(const std::vector<FdtcValue>& base_fdtc_per_boundary,
                               const CoverGeometry& geom, bool fully_ramified,
                               const std::optional<GeometryType>& base_geometry);

// Contrapositive Heegaard Floer obstruction: a certified |c| >= degree for
// a coprime cyclic branched cover of a hyperbolic braid closure rules out
// an L-space and produces a taut foliation.
Verdict rule_lspace_obstruction(const FdtcValue& braid_fdtc, std::int64_t strands,
                                std::int64_t degree,
                                const std::optional<GeometryType>& complement_geometry);

// Pseudo-Anosov monodromy with at least 2 boundary twists per prong count
// lifts to a universally tight contact structure under any fully ramified
// covering. When the cover geometry is supplied, the notes record the
// lifted prong counts p_i * d and lifted twists k_i / (p_i * d).
Verdict rule_universal_tightness(const std::optional<std::vector<ProngDatum>>& prongs,
                                 const std::optional<NielsenThurston>& nt_type,
                                 bool fully_ramified,
                                 const std::optional<CoverGeometry>& geom);

// A certified non-right-veering braid lifts to a loose transverse link in
// any fully ramified covering, and the lifted contact structure is
// overtwisted.
Verdict rule_loose_lift(RightVeering base_status, bool fully_ramified);

// Standard cyclic covers always exist, so certified non-right-veering alone
// already makes the transverse link virtually loose. The converse is open:
// this rule never concludes that a link is not virtually loose.
Verdict rule_virtually_loose(RightVeering base_status);

// A certified negative twist coefficient of an open book monodromy makes
// the supported contact structure overtwisted.
Verdict rule_overtwisted(const FdtcValue& monodromy_fdtc);

// |c| >= 1 certified: the open book's 3-manifold is hyperbolic, Seifert
// fibered, or toroidal exactly as the monodromy is pseudo-Anosov, periodic,
// or reducible.
Verdict rule_geometry_from_magnitude(const FdtcValue& monodromy_fdtc,
                                     const std::optional<NielsenThurston>& nt_type);

const char* to_label(HypothesisStatus s);
const char* to_label(VerdictStatus s);
const char* to_label(GeometryType t);
const char* to_label(NielsenThurston t);

} // namespace fdtc

#endif
