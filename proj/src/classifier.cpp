#include "fdtc/classifier.hpp"

#include <numeric>

namespace fdtc {

namespace {

HypothesisStatus from_bool(bool b) {
    return b ? HypothesisStatus::satisfied : HypothesisStatus::violated;
}

HypothesisStatus conj(std::initializer_list<HypothesisStatus> parts) {
    bool unknown = false;
    for (HypothesisStatus s : parts) {
        if (s == HypothesisStatus::violated) return HypothesisStatus::violated;
        if (s == HypothesisStatus::unknown) unknown = true;
    }
    return unknown ? HypothesisStatus::unknown : HypothesisStatus::satisfied;
}

HypothesisStatus disj(std::initializer_list<HypothesisStatus> parts) {
    bool unknown = false;
    for (HypothesisStatus s : parts) {
        if (s == HypothesisStatus::satisfied) return HypothesisStatus::satisfied;
        if (s == HypothesisStatus::unknown) unknown = true;
    }
    return unknown ? HypothesisStatus::unknown : HypothesisStatus::violated;
}

// |c| > t: Satisfied when certified for the whole interval, Violated when
// |c| <= t is certified, Unknown otherwise.
HypothesisStatus abs_greater_status(const FdtcValue& v, const Rational& t) {
    if (certifies_abs_greater(v, t)) return HypothesisStatus::satisfied;
    if (v.lower() >= -t && v.upper() <= t) return HypothesisStatus::violated;
    return HypothesisStatus::unknown;
}

HypothesisStatus abs_geq_status(const FdtcValue& v, const Rational& t) {
    if (certifies_abs_geq(v, t)) return HypothesisStatus::satisfied;
    if (v.lower() > -t && v.upper() < t) return HypothesisStatus::violated;
    return HypothesisStatus::unknown;
}

HypothesisStatus negative_status(const FdtcValue& v) {
    if (certifies_less(v, Rational(0))) return HypothesisStatus::satisfied;
    if (certifies_geq(v, Rational(0))) return HypothesisStatus::violated;
    return HypothesisStatus::unknown;
}

HypothesisStatus not_right_veering_status(RightVeering rv) {
    switch (rv) {
        case RightVeering::not_right_veering: return HypothesisStatus::satisfied;
        case RightVeering::right_veering: return HypothesisStatus::violated;
        case RightVeering::indeterminate: return HypothesisStatus::unknown;
    }
    throw InternalError("unreachable right-veering status");
}

const char* pretty_geometry(GeometryType t) {
    switch (t) {
        case GeometryType::hyperbolic: return "hyperbolic";
        case GeometryType::toroidal: return "toroidal";
        case GeometryType::seifert_fibered: return "Seifert fibered";
    }
    throw InternalError("unreachable geometry type");
}

} // namespace

Verdict make_verdict(std::string rule_id, std::string conclusion,
                     std::vector<Hypothesis> hypotheses, std::vector<std::string> notes) {
    bool all_satisfied = true;
    for (const Hypothesis& h : hypotheses)
        if (h.status != HypothesisStatus::satisfied) all_satisfied = false;
    Verdict v;
    v.rule_id = std::move(rule_id);
    v.conclusion = std::move(conclusion);
    v.status = all_satisfied ? VerdictStatus::proved : VerdictStatus::inconclusive;
    v.hypotheses = std::move(hypotheses);
    v.notes = std::move(notes);
    return v;
}

Verdict rule_geometry_transfer(const std::vector<FdtcValue>& base_fdtc_per_boundary,
                               const CoverGeometry& geom, bool fully_ramified,
                               const std::optional<GeometryType>& base_geometry) {
    if (static_cast<int>(base_fdtc_per_boundary.size()) != geom.base_boundary_count)
        throw InternalError("one twist coefficient per base boundary is required");

    const HypothesisStatus both_connected =
        from_bool(geom.base_boundary_count == 1 && geom.boundaries.size() == 1);
    HypothesisStatus total_excess = HypothesisStatus::violated;
    if (geom.base_boundary_count == 1)
        total_excess =
            abs_greater_status(base_fdtc_per_boundary[0], Rational(geom.total_degree));
    const HypothesisStatus branch_a = conj({both_connected, total_excess});

    HypothesisStatus branch_b = HypothesisStatus::satisfied;
    for (const BoundaryComponent& bc : geom.boundaries)
        branch_b = conj({branch_b, abs_greater_status(base_fdtc_per_boundary[bc.base_boundary],
                                                      Rational(4) * Rational(bc.degree))});

    std::vector<Hypothesis> hyps;
    hyps.push_back({"the covering is fully ramified", from_bool(fully_ramified)});
    hyps.push_back({"the covering surface has negative euler characteristic",
                    from_bool(geom.euler_char < 0)});
    hyps.push_back({"the geometry type of the base manifold is asserted",
                    base_geometry ? HypothesisStatus::satisfied : HypothesisStatus::unknown});
    hyps.push_back({"twisting beats the degree: connected boundaries with |c| above the "
                    "total degree, or |c| above 4 times the covering degree of every "
                    "boundary component",
                    disj({branch_a, branch_b})});

    std::vector<std::string> notes;
    if (branch_a == HypothesisStatus::satisfied)
        notes.push_back("certified via connected boundaries and |c| > total degree");
    if (branch_b == HypothesisStatus::satisfied)
        notes.push_back("certified via |c| > 4 * covering degree at every boundary component");

    std::string conclusion =
        base_geometry
            ? std::string("the 3-manifold of the covering open book is ") +
                  pretty_geometry(*base_geometry)
            : "the 3-manifold of the covering open book has the same geometry type "
              "as the base";
    return make_verdict("geometry-transfer", std::move(conclusion), std::move(hyps),
                        std::move(notes));
}

Verdict rule_lspace_obstruction(const FdtcValue& braid_fdtc, std::int64_t strands,
                                std::int64_t degree,
                                const std::optional<GeometryType>& complement_geometry) {
    std::vector<Hypothesis> hyps;
    hyps.push_back({"gcd(strand count, covering degree) = 1",
                    from_bool(std::gcd(strands, degree) == 1)});
    hyps.push_back({"covering degree at least 2", from_bool(degree >= 2)});
    HypothesisStatus hyp_geo = HypothesisStatus::unknown;
    if (complement_geometry)
        hyp_geo = from_bool(*complement_geometry == GeometryType::hyperbolic);
    hyps.push_back({"the branch link complement is hyperbolic (asserted)", hyp_geo});
    hyps.push_back({"|c| >= covering degree is certified",
                    abs_geq_status(braid_fdtc, Rational(degree))});

    return make_verdict(
        "lspace-obstruction",
        "the " + std::to_string(degree) +
            "-fold cyclic cover branched over the closed braid is not an L-space "
            "and carries a taut foliation",
        std::move(hyps));
}

Verdict rule_universal_tightness(const std::optional<std::vector<ProngDatum>>& prongs,
                                 const std::optional<NielsenThurston>& nt_type,
                                 bool fully_ramified,
                                 const std::optional<CoverGeometry>& geom) {
    std::vector<Hypothesis> hyps;
    HypothesisStatus hyp_pa = HypothesisStatus::unknown;
    if (nt_type) hyp_pa = from_bool(*nt_type == NielsenThurston::pseudo_anosov);
    hyps.push_back({"the monodromy is pseudo-Anosov (asserted)", hyp_pa});

    HypothesisStatus hyp_prongs = HypothesisStatus::unknown;
    if (prongs) {
        bool ok = !prongs->empty();
        for (const ProngDatum& pd : *prongs)
            if (pd.p < 1) ok = false;
        if (geom && static_cast<int>(prongs->size()) != geom->base_boundary_count)
            ok = false;
        hyp_prongs = from_bool(ok);
    }
    hyps.push_back({"prong data (k_i, p_i) with p_i >= 1 is supplied for every base "
                    "boundary (asserted)",
                    hyp_prongs});

    HypothesisStatus hyp_k = HypothesisStatus::unknown;
    if (prongs) {
        bool ok = !prongs->empty();
        for (const ProngDatum& pd : *prongs)
            if (pd.k < 2) ok = false;
        hyp_k = from_bool(ok);
    }
    hyps.push_back({"k_i >= 2 at every boundary", hyp_k});
    hyps.push_back({"the covering is fully ramified", from_bool(fully_ramified)});

    std::vector<std::string> notes;
    if (prongs && geom && hyp_prongs == HypothesisStatus::satisfied) {
        for (const BoundaryComponent& bc : geom->boundaries) {
            const ProngDatum& pd = (*prongs)[bc.base_boundary];
            const std::int64_t lifted_prongs = pd.p * bc.degree;
            notes.push_back("over base boundary " + std::to_string(bc.base_boundary + 1) +
                            ", component " + std::to_string(bc.component + 1) +
                            ": lifted prong count " + std::to_string(lifted_prongs) +
                            ", lifted twist " + Rational(pd.k, lifted_prongs).str());
        }
    } else if (prongs && hyp_prongs == HypothesisStatus::satisfied) {
        notes.push_back("a component of boundary covering degree d lifts prong count "
                        "p_i to p_i * d and twist to k_i / (p_i * d)");
    }

    return make_verdict(
        "universal-tightness",
        "the contact structure supported by the covering open book is universally tight",
        std::move(hyps), std::move(notes));
}

Verdict rule_loose_lift(RightVeering base_status, bool fully_ramified) {
    std::vector<Hypothesis> hyps;
    hyps.push_back({"the braid is certified not right-veering",
                    not_right_veering_status(base_status)});
    hyps.push_back({"the covering is fully ramified", from_bool(fully_ramified)});
    return make_verdict("loose-lift",
                        "the lifted contact structure is overtwisted and the lifted "
                        "transverse link is loose",
                        std::move(hyps));
}

Verdict rule_virtually_loose(RightVeering base_status) {
    std::vector<Hypothesis> hyps;
    hyps.push_back({"the braid is certified not right-veering",
                    not_right_veering_status(base_status)});
    return make_verdict(
        "virtually-loose", "the transverse link is virtually loose",
        std::move(hyps),
        {"standard cyclic covers are fully ramified and exist in every degree, so no "
         "covering hypothesis is needed; a right-veering braid yields no conclusion "
         "in either direction"});
}

Verdict rule_overtwisted(const FdtcValue& monodromy_fdtc) {
    std::vector<Hypothesis> hyps;
    hyps.push_back({"the twist coefficient is certified negative",
                    negative_status(monodromy_fdtc)});
    return make_verdict("overtwisted-negative-twist",
                        "the contact structure supported by the open book is overtwisted",
                        std::move(hyps));
}

Verdict rule_geometry_from_magnitude(const FdtcValue& monodromy_fdtc,
                                     const std::optional<NielsenThurston>& nt_type) {
    std::vector<Hypothesis> hyps;
    hyps.push_back({"|c| >= 1 is certified", abs_geq_status(monodromy_fdtc, Rational(1))});
    hyps.push_back({"the Nielsen-Thurston type is asserted",
                    nt_type ? HypothesisStatus::satisfied : HypothesisStatus::unknown});

    std::string conclusion = "the open book's 3-manifold geometry follows the asserted "
                             "Nielsen-Thurston type";
    if (nt_type) {
        switch (*nt_type) {
            case NielsenThurston::pseudo_anosov:
                conclusion = "the open book's 3-manifold is hyperbolic";
                break;
            case NielsenThurston::periodic:
                conclusion = "the open book's 3-manifold is Seifert fibered";
                break;
            case NielsenThurston::reducible:
                conclusion = "the open book's 3-manifold is toroidal";
                break;
        }
    }
    return make_verdict("geometry-from-magnitude", std::move(conclusion), std::move(hyps));
}

const char* to_label(HypothesisStatus s) {
    switch (s) {
        case HypothesisStatus::satisfied: return "Satisfied";
        case HypothesisStatus::violated: return "Violated";
        case HypothesisStatus::unknown: return "Unknown";
    }
    throw InternalError("unreachable hypothesis status");
}

const char* to_label(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::proved: return "Proved";
        case VerdictStatus::refuted: return "Refuted";
        case VerdictStatus::inconclusive: return "Inconclusive";
    }
    throw InternalError("unreachable verdict status");
}

const char* to_label(GeometryType t) {
    switch (t) {
        case GeometryType::hyperbolic: return "hyperbolic";
        case GeometryType::toroidal: return "toroidal";
        case GeometryType::seifert_fibered: return "seifert_fibered";
    }
    throw InternalError("unreachable geometry type");
}

const char* to_label(NielsenThurston t) {
    switch (t) {
        case NielsenThurston::periodic: return "periodic";
        case NielsenThurston::reducible: return "reducible";
        case NielsenThurston::pseudo_anosov: return "pseudo_anosov";
    }
    throw InternalError("unreachable Nielsen-Thurston type");
}

} // namespace fdtc
