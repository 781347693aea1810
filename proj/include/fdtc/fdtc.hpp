#ifndef FDTC_FDTC_HPP
#define FDTC_FDTC_HPP

#include <cstdint>
#include <optional>

#include "fdtc/braid.hpp"
#include "fdtc/dehornoy.hpp"
#include "fdtc/rational.hpp"

namespace fdtc {

// Witness that power(w, period) equals full_twist^twist, which pins the
// fractional Dehn twist coefficient to exactly twist/period.
struct PeriodicCertificate {
    std::int64_t period; // N >= 1
    std::int64_t twist;  // M

    friend bool operator==(const PeriodicCertificate& a,
                           const PeriodicCertificate& b) noexcept {
        return a.period == b.period && a.twist == b.twist;
    }
};

// A certified fractional Dehn twist coefficient: either an exact rational
// backed by a periodic certificate, or a closed interval [lower, upper] that
// provably contains the value. Exact values always carry their certificate.
class FdtcValue {
public:
    // Default: the uninformative interval [0, 0] with no certificate.
    FdtcValue() = default;

    static FdtcValue exact(const Rational& value, const PeriodicCertificate& cert) {
        FdtcValue v;
        v.lower_ = v.upper_ = value;
        v.certificate_ = cert;
        return v;
    }

    static FdtcValue interval(const Rational& lower, const Rational& upper) {
        if (upper < lower)
            throw InternalError("interval with upper < lower");
        FdtcValue v;
        v.lower_ = lower;
        v.upper_ = upper;
        return v;
    }

    bool is_exact() const noexcept { return certificate_.has_value(); }
    const Rational& lower() const noexcept { return lower_; }
    const Rational& upper() const noexcept { return upper_; }

    // Only meaningful for exact values.
    const Rational& value() const {
        if (!is_exact()) throw InternalError("value() on an interval FDTC");
        return lower_;
    }

    const std::optional<PeriodicCertificate>& certificate() const noexcept {
        return certificate_;
    }

    friend bool operator==(const FdtcValue& a, const FdtcValue& b) noexcept {
        return a.lower_ == b.lower_ && a.upper_ == b.upper_ &&
               a.certificate_ == b.certificate_;
    }

private:
    Rational lower_;
    Rational upper_;
    std::optional<PeriodicCertificate> certificate_;
};

enum class RightVeering { right_veering, not_right_veering, indeterminate };

// Interval certification: a strict or weak inequality holds for the value
// only if it holds for every point of the interval. Tightening an interval
// can only turn these from false to true, never back.
inline bool certifies_greater(const FdtcValue& v, const Rational& t) {
    return v.lower() > t;
}
inline bool certifies_geq(const FdtcValue& v, const Rational& t) {
    return v.lower() >= t;
}
inline bool certifies_less(const FdtcValue& v, const Rational& t) {
    return v.upper() < t;
}
inline bool certifies_leq(const FdtcValue& v, const Rational& t) {
    return v.upper() <= t;
}
inline bool certifies_abs_geq(const FdtcValue& v, const Rational& t) {
    return v.lower() >= t || v.upper() <= -t;
}
inline bool certifies_abs_greater(const FdtcValue& v, const Rational& t) {
    return v.lower() > t || v.upper() < -t;
}

struct FdtcOptions {
    int m_max = 12;
    int max_period = 24;
    long long reduction_budget = kDefaultReductionBudget;
};

// Largest m with full_twist^m <= w in the Dehornoy order. The floor of any
// word of length L lies in [-L, L], so the search bracket [-L-1, L+1] is
// always valid; a violation means the order engine is broken.
std::int64_t dehornoy_floor(const BraidWord& w,
                            long long budget = kDefaultReductionBudget);

// Searches periods 1..max_period for a certificate. For each period N the
// exponent sum forces the unique possible twist M, so only one triviality
// check per candidate period is needed.
std::optional<PeriodicCertificate> certify_periodic(
    const BraidWord& w, int max_period, long long budget = kDefaultReductionBudget);

// Exact value when a periodic certificate exists, otherwise the intersection
// of the floor intervals [floor(w^m)/m, (floor(w^m)+1)/m] for m = 1..m_max.
// The one-strand group is trivial, so its only element reports Exact 0.
FdtcValue fdtc_bounds(const BraidWord& w, const FdtcOptions& opts = {});

// Sign of the FDTC decides right-veering; an interval straddling 0 is
// indeterminate unless w itself is trivial (the identity is right-veering
// by convention). Pre: v was computed from w.
RightVeering right_veering_status(const FdtcValue& v, const BraidWord& w,
                                  long long budget = kDefaultReductionBudget);

} // namespace fdtc

#endif
