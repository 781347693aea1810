#include "fdtc/fdtc.hpp"

namespace fdtc {

namespace {

// full_twist^m <= w in the Dehornoy order
bool twist_below(std::int64_t m, const BraidWord& w, long long budget) {
    return compare(power(full_twist(w.strands()), m), w, budget) != Order::greater;
}

// Binary search for max{m : full_twist^m <= w} inside a bracket that is
// required to satisfy P(lo) and !P(hi).
std::int64_t floor_in_bracket(const BraidWord& w, std::int64_t lo, std::int64_t hi,
                              long long budget) {
    if (!twist_below(lo, w, budget))
        throw InternalError("floor bracket lower end not below the word");
    if (twist_below(hi, w, budget))
        throw InternalError("floor bracket upper end not above the word");
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (twist_below(mid, w, budget)) lo = mid;
        else hi = mid;
    }
    return lo;
}

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
    std::int64_t q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
    return -floor_div(-num, den);
}

} // namespace

std::int64_t dehornoy_floor(const BraidWord& w, long long budget) {
    if (w.strands() < 2)
        throw DegenerateStrandsError("the Dehornoy floor needs at least 2 strands");
    const std::int64_t bound = w.size() + 1;
    return floor_in_bracket(w, -bound, bound, budget);
}

std::optional<PeriodicCertificate> certify_periodic(const BraidWord& w, int max_period,
                                                    long long budget) {
    if (max_period < 1)
        throw InternalError("max_period must be at least 1");
    if (w.strands() < 2)
        return PeriodicCertificate{1, 0}; // B_1 is trivial
    const std::int64_t e = exponent_sum(w);
    const std::int64_t twist_exponent =
        static_cast<std::int64_t>(w.strands()) * (w.strands() - 1);
    for (std::int64_t n = 1; n <= max_period; ++n) {
        if ((e * n) % twist_exponent != 0) continue;
        const std::int64_t m = e * n / twist_exponent;
        const BraidWord probe =
            compose(power(w, n), power(full_twist(w.strands()), -m));
        if (is_trivial(probe, budget)) return PeriodicCertificate{n, m};
    }
    return std::nullopt;
}

FdtcValue fdtc_bounds(const BraidWord& w, const FdtcOptions& opts) {
    if (opts.m_max < 1) throw InternalError("m_max must be at least 1");
    if (w.strands() < 2)
        return FdtcValue::exact(Rational(0), PeriodicCertificate{1, 0});

    if (auto cert = certify_periodic(w, opts.max_period, opts.reduction_budget))
        return FdtcValue::exact(Rational(cert->twist, cert->period), *cert);

    Rational lo, hi;
    for (std::int64_t m = 1; m <= opts.m_max; ++m) {
        const BraidWord wm = power(w, m);
        std::int64_t blo = -(wm.size() + 1);
        std::int64_t bhi = wm.size() + 1;
        if (m > 1) {
            // floor(w^m) lies in [m*lo - 1, m*hi]; shrink the bracket to it.
            blo = std::max<std::int64_t>(
                blo, ceil_div(m * lo.numerator(), lo.denominator()) - 2);
            bhi = std::min<std::int64_t>(
                bhi, floor_div(m * hi.numerator(), hi.denominator()) + 1);
        }
        const std::int64_t f = floor_in_bracket(wm, blo, bhi, opts.reduction_budget);
        const Rational step_lo(f, m);
        const Rational step_hi(f + 1, m);
        if (m == 1) {
            lo = step_lo;
            hi = step_hi;
        } else {
            if (step_lo > lo) lo = step_lo;
            if (step_hi < hi) hi = step_hi;
        }
        if (hi < lo)
            throw EmptyIntersectionError(
                "floor intervals have empty intersection at power " + std::to_string(m));
    }
    return FdtcValue::interval(lo, hi);
}

RightVeering right_veering_status(const FdtcValue& v, const BraidWord& w,
                                  long long budget) {
    const Rational zero(0);
    if (v.is_exact()) {
        if (v.value() > zero) return RightVeering::right_veering;
        if (v.value() < zero) return RightVeering::not_right_veering;
        // Exact 0 forces power(w, N) trivial, and braid groups are torsion
        // free, so w is the identity.
        return RightVeering::right_veering;
    }
    if (v.lower() > zero) return RightVeering::right_veering;
    if (v.upper() < zero) return RightVeering::not_right_veering;
    if (is_trivial(w, budget)) return RightVeering::right_veering;
    return RightVeering::indeterminate;
}

} // namespace fdtc
