// Acceptance gate: every release-blocking behavior in one binary, one
// printed PASS/FAIL line per criterion, wired into ctest via doctest.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "fdtc/braid.hpp"
#include "fdtc/classifier.hpp"
#include "fdtc/cover.hpp"
#include "fdtc/dehornoy.hpp"
#include "fdtc/fdtc.hpp"
#include "fdtc/report.hpp"
#include "fdtc/transfer.hpp"
#include "oracles.hpp"

using namespace fdtc;
using nlohmann::json;

namespace {

bool report_line(int criterion, bool ok, const std::string& description) {
    std::cout << "[accept] criterion " << criterion << ": " << (ok ? "PASS" : "FAIL")
              << " - " << description << "\n";
    return ok;
}

bool suite_line(bool ok, const std::string& description) {
    std::cout << "[accept]   suite: " << (ok ? "pass" : "FAIL") << " - " << description
              << "\n";
    return ok;
}

BraidWord rotation(int n) {
    std::string text;
    for (int i = 1; i < n; ++i) text += "s" + std::to_string(i) + " ";
    return parse_braid(text, n);
}

} // namespace

TEST_CASE("criterion 1: half twist coefficient") {
    const FdtcValue v = fdtc_bounds(parse_braid("s1", 2));
    const bool ok = v.is_exact() && v.value() == Rational(1, 2) &&
                    v.certificate()->period == 2 && v.certificate()->twist == 1;
    CHECK(report_line(1, ok,
                      "the half twist on two strands has exact coefficient 1/2 "
                      "with certificate (period 2, twist 1)"));
}

TEST_CASE("criterion 2: annulus guard fires with a documented counterexample") {
    bool ok = false;
    try {
        TransferRequest req;
        req.braid.braid_text = "s1";
        req.braid.strands = 2;
        req.cover.degree = 2;
        run_transfer(req);
    } catch (const AnnulusError& e) {
        const json detail = json::parse(e.detail_json());
        const json& cx = detail.at("counterexample");
        ok = e.category() == ErrorCategory::guard &&
             std::string(e.code()) == "annulus_exception" &&
             detail.at("euler_characteristic") == 0 &&
             detail.at("naive_division_values") == json::array({"1/2", "1/2"}) &&
             cx.at("base_fdtc") == "1/2" && cx.at("true_lifted_fdtc") == "1/1" &&
             cx.at("naive_formula_value") == "1/2" &&
             cx.at("true_lifted_fdtc") != cx.at("naive_formula_value");
    } catch (...) {
    }
    CHECK(report_line(2, ok,
                      "two strand double cover transfer raises the annulus guard, "
                      "citing that the naive division value 1/2 contradicts the "
                      "true annulus core lift value 1"));
}

TEST_CASE("criterion 3: full twists") {
    bool ok = true;
    for (int n = 2; n <= 6; ++n) {
        const FdtcValue v = fdtc_bounds(full_twist(n));
        ok = ok && v.is_exact() && v.value() == Rational(1) &&
             v.certificate()->period == 1 && v.certificate()->twist == 1;
    }
    CHECK(report_line(3, ok,
                      "the full twist on 2..6 strands has exact coefficient 1 "
                      "with certificate (1, 1)"));
}

TEST_CASE("criterion 4: rotations") {
    bool ok = true;
    for (int n = 3; n <= 6; ++n) {
        const FdtcValue v = fdtc_bounds(rotation(n));
        ok = ok && v.is_exact() && v.value() == Rational(1, n) &&
             v.certificate()->period == n && v.certificate()->twist == 1;
    }
    CHECK(report_line(4, ok,
                      "the rotation braid on n = 3..6 strands has exact "
                      "coefficient 1/n with certificate (n, 1)"));
}

TEST_CASE("criterion 5: full twist through the double cover") {
    bool ok = false;
    const BraidWord delta2 = full_twist(3);
    const MonodromyRep rep = standard_cyclic(3, 2);
    const CoverGeometry geo = cover_geometry(rep);
    if (geo.boundaries.size() == 1 && geo.boundaries[0].degree == 2) {
        TransferInput in;
        in.base_fdtc = fdtc_bounds(delta2);
        in.geometry = geo;
        in.fully_ramified = is_fully_ramified(rep);
        const TransferResult out = lift_fdtc(in);
        const bool lifted_ok = out.divisor == 2 && out.lifted_fdtc.is_exact() &&
                               out.lifted_fdtc.value() == Rational(1, 2) &&
                               out.lifted_fdtc.certificate()->period == 2 &&
                               out.lifted_fdtc.certificate()->twist == 1;
        // Square of the lifted twisting recovers the boundary Dehn twist,
        // and the certificate arithmetic agrees with the division.
        const bool chain_ok =
            lifted_ok && out.lifted_fdtc.value() * Rational(2) == Rational(1);
        const bool cert_ok =
            periodic_lift_check(*in.base_fdtc.certificate(), out.divisor) ==
            out.lifted_fdtc.value();
        ok = lifted_ok && chain_ok && cert_ok;
    }
    CHECK(report_line(5, ok,
                      "the full twist on three strands lifts through the double "
                      "cover to exact 1/2 on the single degree 2 boundary, the "
                      "squared lift equals the boundary twist, and the "
                      "certificate arithmetic agrees"));
}

TEST_CASE("criterion 6: cover geometry table") {
    bool ok = true;
    for (int n = 1; n <= 10; ++n) {
        for (int d = 2; d <= 6; ++d) {
            const MonodromyRep rep = standard_cyclic(n, d);
            const CoverGeometry g = cover_geometry(rep);
            ok = ok && g.euler_char == oracles::euler_char_by_cycles(rep);
            const auto [count, degree] = boundary_connectivity(n, d);
            ok = ok && static_cast<int>(g.boundaries.size()) == count;
            for (const auto& b : g.boundaries) ok = ok && b.degree == degree;
        }
    }
    const CoverGeometry g32 = cover_geometry(standard_cyclic(3, 2));
    ok = ok && g32.euler_char == -1 && g32.genus == 1 && g32.boundaries.size() == 1 &&
         g32.boundaries[0].degree == 2;
    const CoverGeometry g42 = cover_geometry(standard_cyclic(4, 2));
    ok = ok && g42.euler_char == -2 && g42.genus == 1 && g42.boundaries.size() == 2;
    const CoverGeometry g22 = cover_geometry(standard_cyclic(2, 2));
    ok = ok && g22.euler_char == 0 && g22.genus == 0 && g22.boundaries.size() == 2;
    CHECK(report_line(6, ok,
                      "cyclic cover geometry for n <= 10, d <= 6 matches the "
                      "independent cell count and boundary splitting, including "
                      "(3,2) -> (chi -1, one degree 2 boundary) and (2,2) -> "
                      "(chi 0, annulus)"));
}

TEST_CASE("criterion 7: Floer obstruction rule") {
    const BraidWord braid = power(parse_braid("s1 s2", 3), 7);
    const FdtcValue v = fdtc_bounds(braid);
    bool ok = v.is_exact() && v.value() == Rational(7, 3) &&
              v.certificate()->period == 3 && v.certificate()->twist == 7 &&
              certifies_abs_geq(v, Rational(2));

    const Verdict proved = rule_lspace_obstruction(v, 3, 2, GeometryType::hyperbolic);
    ok = ok && proved.status == VerdictStatus::proved;

    const Verdict blocked = rule_lspace_obstruction(v, 4, 2, GeometryType::hyperbolic);
    ok = ok && blocked.status == VerdictStatus::inconclusive &&
         blocked.hypotheses[0].status == HypothesisStatus::violated;
    CHECK(report_line(7, ok,
                      "certified 7/3 >= degree 2 with coprime strand count "
                      "proves the no-L-space conclusion, and a shared factor "
                      "downgrades it with the gcd hypothesis violated"));
}

TEST_CASE("criterion 8: negative rotation is loose everywhere") {
    const BraidWord w = invert(parse_braid("s1 s2", 3));
    const FdtcValue v = fdtc_bounds(w);
    bool ok = v.is_exact() && v.value() == Rational(-1, 3);

    const RightVeering rv = right_veering_status(v, w);
    ok = ok && rv == RightVeering::not_right_veering;

    ok = ok && rule_loose_lift(rv, true).status == VerdictStatus::proved;
    ok = ok && rule_virtually_loose(rv).status == VerdictStatus::proved;

    TransferInput in;
    in.base_fdtc = v;
    in.geometry = cover_geometry(standard_cyclic(3, 2));
    in.fully_ramified = true;
    const RightVeeringTransfer t = propagate_right_veering(rv, in);
    ok = ok && t.braid == RightVeering::not_right_veering &&
         t.lifted_monodromy == RightVeering::not_right_veering &&
         t.lifted_braid == RightVeering::not_right_veering;
    CHECK(report_line(8, ok,
                      "the negative rotation on three strands has coefficient "
                      "-1/3, is not right-veering, proves both looseness rules, "
                      "and stays non right-veering at all three positions of "
                      "the lift"));
}

TEST_CASE("criterion 9: property suites") {
    bool ok = true;

    // Order axioms: irreflexivity, antisymmetry, left invariance, and a
    // transitivity sample.
    {
        std::mt19937 rng(90011);
        for (int trial = 0; trial < 200 && ok; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 3);
            const BraidWord a = oracles::random_word(rng, n, 10);
            const BraidWord b = oracles::random_word(rng, n, 10);
            const BraidWord c = oracles::random_word(rng, n, 10);
            ok = ok && compare(a, a) == Order::equal;
            const Order ab = compare(a, b);
            const Order ba = compare(b, a);
            ok = ok && ((ab == Order::equal && ba == Order::equal) ||
                        (ab == Order::less && ba == Order::greater) ||
                        (ab == Order::greater && ba == Order::less));
            ok = ok && compare(compose(c, a), compose(c, b)) == ab;
            if (ab == Order::less && compare(b, c) == Order::less)
                ok = ok && compare(a, c) == Order::less;
        }
        ok = suite_line(ok, "order axioms on 200 random triples") && ok;
    }

    // Floor quasi-additivity under central full twists.
    {
        std::mt19937 rng(90012);
        bool sub = true;
        for (int trial = 0; trial < 200 && sub; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 3);
            const BraidWord w = oracles::random_word(rng, n, 10);
            const int k = static_cast<int>(rng() % 5) - 2;
            const long long f = dehornoy_floor(w);
            sub = sub && dehornoy_floor(compose(power(full_twist(n), k), w)) == f + k;
        }
        ok = suite_line(sub, "floor shifts additively under 200 random "
                                "central twist compositions") && ok;
    }

    // Interval nesting: the reported window sits inside every floor bracket.
    {
        std::mt19937 rng(90013);
        bool sub = true;
        for (int trial = 0; trial < 200 && sub; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 3);
            const BraidWord w = oracles::random_word(rng, n, 8);
            FdtcOptions opts;
            opts.m_max = 6;
            const FdtcValue v = fdtc_bounds(w, opts);
            for (int m = 1; m <= 6; ++m) {
                const long long fm = dehornoy_floor(power(w, m));
                sub = sub && Rational(fm, m) <= v.lower() &&
                      v.upper() <= Rational(fm + 1, m);
            }
        }
        ok = suite_line(sub, "bounds nest inside all floor brackets on 200 "
                                "random words") && ok;
    }

    // Conjugation invariance of certified values.
    {
        std::mt19937 rng(90014);
        bool sub = true;
        for (int trial = 0; trial < 200 && sub; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 3);
            const BraidWord w = oracles::random_periodic(rng, n);
            const BraidWord g = oracles::random_word(rng, n, 8);
            const FdtcValue a = fdtc_bounds(w);
            const FdtcValue b = fdtc_bounds(compose(compose(g, w), invert(g)));
            sub = sub && a.is_exact() && b.is_exact() && a.value() == b.value();
        }
        ok = suite_line(sub, "conjugation preserves 200 certified values") && ok;
    }

    // Mirror antisymmetry for exact values and intervals alike.
    {
        std::mt19937 rng(90015);
        bool sub = true;
        for (int trial = 0; trial < 200 && sub; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 3);
            FdtcOptions opts;
            opts.m_max = 6;
            const BraidWord w = (trial % 2 == 0) ? oracles::random_periodic(rng, n)
                                                 : oracles::random_word(rng, n, 8);
            const FdtcValue a = fdtc_bounds(w, opts);
            const FdtcValue b = fdtc_bounds(invert(w), opts);
            sub = sub && b.lower() == Rational(0) - a.upper() &&
                  b.upper() == Rational(0) - a.lower() &&
                  a.is_exact() == b.is_exact();
        }
        ok = suite_line(sub, "mirror words negate 200 values end for end") && ok;
    }

    // Oracle equivalence: independent linear floor scan.
    {
        std::mt19937 rng(90016);
        bool sub = true;
        for (int trial = 0; trial < 500 && sub; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 3);
            const BraidWord w = oracles::random_word(rng, n, 20);
            sub = sub && oracles::floor_linear_scan(w) == dehornoy_floor(w);
        }
        ok = suite_line(sub, "linear floor scan agrees on 500 random words "
                                "of length up to 20") && ok;
    }

    // Oracle equivalence: exhaustive grid search for certificates.
    {
        std::mt19937 rng(90017);
        bool sub = true;
        for (int trial = 0; trial < 200 && sub; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 3);
            const bool periodic_case = trial % 2 == 0;
            const BraidWord w = periodic_case ? oracles::random_periodic(rng, n)
                                              : oracles::random_word(rng, n, 6);
            const int max_period = periodic_case ? 6 : 4;
            const long long max_twist = periodic_case ? 20 : 8;
            const auto grid = oracles::periodic_exhaustive(w, max_period, max_twist);
            const auto fast = certify_periodic(w, max_period);
            sub = sub && grid.has_value() == fast.has_value();
            if (sub && grid)
                sub = grid->period == fast->period && grid->twist == fast->twist;
        }
        ok = suite_line(sub, "grid certificate search agrees on 200 words") && ok;
    }

    CHECK(report_line(9, ok, "randomized property suites (order axioms, floor "
                         "additivity, interval nesting, conjugation, mirror, "
                         "independent oracles)"));
}

TEST_CASE("criterion 10: verdict soundness") {
    std::mt19937 rng(100100);
    bool ok = true;
    const CoverGeometry g32 = cover_geometry(standard_cyclic(3, 2));
    const CoverGeometry g42 = cover_geometry(standard_cyclic(4, 2));

    const auto sound = [](const Verdict& v) {
        const bool all = std::all_of(v.hypotheses.begin(), v.hypotheses.end(),
                                     [](const Hypothesis& h) {
                                         return h.status == HypothesisStatus::satisfied;
                                     });
        return (v.status == VerdictStatus::proved) == all &&
               !(v.status == VerdictStatus::proved &&
                 std::any_of(v.hypotheses.begin(), v.hypotheses.end(),
                             [](const Hypothesis& h) {
                                 return h.status == HypothesisStatus::violated;
                             }));
    };

    int evaluations = 0;
    while (evaluations < 1000 && ok) {
        const long long num = static_cast<long long>(rng() % 25) - 12;
        const long long den = 1 + static_cast<long long>(rng() % 6);
        const FdtcValue v =
            (rng() % 2) ? FdtcValue::exact(Rational(num, den),
                                           PeriodicCertificate{den, num})
                        : FdtcValue::interval(Rational(num - 1, den), Rational(num + 1, den));
        const bool fr = rng() % 2;
        const auto rv = static_cast<RightVeering>(rng() % 3);
        const std::optional<GeometryType> geo =
            (rng() % 2) ? std::optional<GeometryType>(static_cast<GeometryType>(rng() % 3))
                        : std::nullopt;
        const std::optional<NielsenThurston> nt =
            (rng() % 2)
                ? std::optional<NielsenThurston>(static_cast<NielsenThurston>(rng() % 3))
                : std::nullopt;
        const std::optional<std::vector<ProngDatum>> prongs =
            (rng() % 2) ? std::optional<std::vector<ProngDatum>>(
                              {{static_cast<long long>(rng() % 4),
                                static_cast<long long>(rng() % 4)}})
                        : std::nullopt;

        const Verdict batch[] = {
            rule_geometry_transfer({v}, (rng() % 2) ? g32 : g42, fr, geo),
            rule_lspace_obstruction(v, 2 + rng() % 4, 2 + rng() % 3, geo),
            rule_universal_tightness(prongs, nt, fr, g32),
            rule_loose_lift(rv, fr),
            rule_virtually_loose(rv),
            rule_overtwisted(v),
            rule_geometry_from_magnitude(v, nt),
        };
        for (const Verdict& verdict : batch) {
            ok = ok && sound(verdict);
            ++evaluations;
        }
    }
    ok = ok && evaluations >= 1000;
    CHECK(report_line(10, ok,
                      "1000+ randomized rule evaluations never prove a "
                      "conclusion over a violated or unknown hypothesis"));
}
