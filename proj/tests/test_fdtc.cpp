#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <random>

#include "fdtc/braid.hpp"
#include "fdtc/dehornoy.hpp"
#include "fdtc/fdtc.hpp"
#include "oracles.hpp"

using namespace fdtc;

TEST_CASE("distinguished twisting floor on small words") {
    CHECK(dehornoy_floor(BraidWord::identity(3)) == 0);
    CHECK(dehornoy_floor(parse_braid("s1", 2)) == 0);
    CHECK(dehornoy_floor(parse_braid("-s1", 2)) == -1);
    CHECK(dehornoy_floor(parse_braid("s1 s2", 3)) == 0);
    CHECK(dehornoy_floor(parse_braid("-s2 -s1", 3)) == -1);
    CHECK(dehornoy_floor(full_twist(3)) == 1);
    CHECK(dehornoy_floor(invert(full_twist(3))) == -1);
    CHECK(dehornoy_floor(compose(full_twist(3), parse_braid("s1", 3))) == 1);
    CHECK(dehornoy_floor(power(full_twist(4), 2)) == 2);
    CHECK_THROWS_AS(dehornoy_floor(BraidWord::identity(1)), DegenerateStrandsError);
}

TEST_CASE("floor shifts by one under a full twist") {
    std::mt19937 rng(1001);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const BraidWord w = oracles::random_word(rng, n, 10);
        const long long f = dehornoy_floor(w);
        CHECK(dehornoy_floor(compose(full_twist(n), w)) == f + 1);
        CHECK(dehornoy_floor(compose(invert(full_twist(n)), w)) == f - 1);
    }
}

TEST_CASE("periodic certificates for the standard families") {
    const auto half = certify_periodic(parse_braid("s1", 2), 24);
    REQUIRE(half.has_value());
    CHECK(half->period == 2);
    CHECK(half->twist == 1);

    for (int n = 2; n <= 6; ++n) {
        const auto c = certify_periodic(full_twist(n), 24);
        REQUIRE(c.has_value());
        CHECK(c->period == 1);
        CHECK(c->twist == 1);
    }

    for (int n = 3; n <= 6; ++n) {
        std::string text;
        for (int i = 1; i < n; ++i) text += "s" + std::to_string(i) + " ";
        const auto c = certify_periodic(parse_braid(text, n), 24);
        REQUIRE(c.has_value());
        CHECK(c->period == n);
        CHECK(c->twist == 1);
    }

    const auto neg = certify_periodic(invert(parse_braid("s1 s2", 3)), 24);
    REQUIRE(neg.has_value());
    CHECK(neg->period == 3);
    CHECK(neg->twist == -1);

    const auto seven = certify_periodic(power(parse_braid("s1 s2", 3), 7), 24);
    REQUIRE(seven.has_value());
    CHECK(seven->period == 3);
    CHECK(seven->twist == 7);
}

TEST_CASE("a twisted rotation equals the rotation power it came from") {
    const BraidWord twisted =
        compose(power(full_twist(3), 2), parse_braid("s1 s2", 3));
    const BraidWord rot7 = power(parse_braid("s1 s2", 3), 7);
    CHECK(is_trivial(compose(twisted, invert(rot7))));
    const auto c = certify_periodic(twisted, 24);
    REQUIRE(c.has_value());
    CHECK(c->period == 3);
    CHECK(c->twist == 7);
    CHECK(fdtc_bounds(twisted).value() == Rational(7, 3));
}

TEST_CASE("non-periodic words get honest intervals") {
    const BraidWord w = parse_braid("s1 -s2", 3);
    CHECK_FALSE(certify_periodic(w, 24).has_value());
    const FdtcValue v = fdtc_bounds(w);
    CHECK_FALSE(v.is_exact());
    CHECK(v.lower() <= Rational(0));
    CHECK(Rational(0) <= v.upper());
    // Twelve homogenization steps pin the value to a window of width 1/12.
    CHECK(v.upper() - v.lower() <= Rational(1, 12));
    CHECK(right_veering_status(v, w) == RightVeering::indeterminate);
}

TEST_CASE("certified values through the bounds entry point") {
    CHECK(fdtc_bounds(parse_braid("s1", 2)).value() == Rational(1, 2));
    CHECK(fdtc_bounds(full_twist(5)).value() == Rational(1));
    CHECK(fdtc_bounds(invert(parse_braid("s1 s2", 3))).value() == Rational(-1, 3));
    for (int k = -6; k <= 6; ++k) {
        const FdtcValue v = fdtc_bounds(power(parse_braid("s1", 2), k));
        REQUIRE(v.is_exact());
        CHECK(v.value() == Rational(k, 2));
    }
}

TEST_CASE("single strand braids are unconditionally trivial") {
    const BraidWord w = BraidWord::identity(1);
    const FdtcValue v = fdtc_bounds(w);
    REQUIRE(v.is_exact());
    CHECK(v.value() == Rational(0));
    REQUIRE(v.certificate().has_value());
    CHECK(v.certificate()->period == 1);
    CHECK(v.certificate()->twist == 0);
}

TEST_CASE("powers scale certified values") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const BraidWord w = oracles::random_periodic(rng, n);
        const FdtcValue base = fdtc_bounds(w);
        REQUIRE(base.is_exact());
        for (int k : {2, 3, -1}) {
            const FdtcValue scaled = fdtc_bounds(power(w, k));
            REQUIRE(scaled.is_exact());
            CHECK(scaled.value() == base.value() * Rational(k));
        }
    }
}

TEST_CASE("conjugation preserves the certified value") {
    std::mt19937 rng(78);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const BraidWord w = oracles::random_periodic(rng, n);
        const BraidWord g = oracles::random_word(rng, n, 8);
        const FdtcValue a = fdtc_bounds(w);
        const FdtcValue b = fdtc_bounds(compose(compose(g, w), invert(g)));
        REQUIRE(a.is_exact());
        REQUIRE(b.is_exact());
        CHECK(a.value() == b.value());
    }
}

TEST_CASE("mirror words negate the value") {
    // Certified case.
    std::mt19937 rng(79);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const BraidWord w = oracles::random_periodic(rng, n);
        const FdtcValue a = fdtc_bounds(w);
        const FdtcValue b = fdtc_bounds(invert(w));
        REQUIRE(a.is_exact());
        REQUIRE(b.is_exact());
        CHECK(b.value() == Rational(0) - a.value());
    }
    // Interval case: the window flips end for end.
    const FdtcValue v = fdtc_bounds(parse_braid("s1 s1 -s2", 3));
    const FdtcValue m = fdtc_bounds(invert(parse_braid("s1 s1 -s2", 3)));
    CHECK_FALSE(v.is_exact());
    CHECK(m.lower() == Rational(0) - v.upper());
    CHECK(m.upper() == Rational(0) - v.lower());
}

TEST_CASE("right veering classification") {
    CHECK(right_veering_status(fdtc_bounds(parse_braid("s1", 2)),
                               parse_braid("s1", 2)) == RightVeering::right_veering);
    CHECK(right_veering_status(fdtc_bounds(parse_braid("-s1", 2)),
                               parse_braid("-s1", 2)) ==
          RightVeering::not_right_veering);
    // Value zero with a certificate still rules out left rotation.
    CHECK(right_veering_status(fdtc_bounds(BraidWord::identity(3)),
                               BraidWord::identity(3)) ==
          RightVeering::right_veering);
    CHECK(right_veering_status(fdtc_bounds(full_twist(4)), full_twist(4)) ==
          RightVeering::right_veering);
}

TEST_CASE("reduction budget propagates out of the bounds computation") {
    FdtcOptions opts;
    opts.reduction_budget = 1;
    CHECK_THROWS_AS(fdtc_bounds(power(parse_braid("s1 -s2", 3), 4), opts),
                    BudgetExceededError);
}
