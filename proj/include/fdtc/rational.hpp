#ifndef FDTC_RATIONAL_HPP
#define FDTC_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "fdtc/errors.hpp"

namespace fdtc {

// Exact rational over 64-bit integers. Always stored in lowest terms with a
// positive denominator. Intermediates go through 128-bit arithmetic and are
// range checked, so overflow surfaces as an InternalError instead of UB.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

    std::int64_t numerator() const noexcept { return num_; }
    std::int64_t denominator() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rational operator-() const { return Rational(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        using W = __int128;
        return reduced(W(a.num_) * b.den_ + W(b.num_) * a.den_, W(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        using W = __int128;
        return reduced(W(a.num_) * b.num_, W(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw InternalError("rational division by zero");
        using W = __int128;
        return reduced(W(a.num_) * b.den_, W(a.den_) * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) noexcept { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) noexcept {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) noexcept { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) noexcept { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) noexcept { return !(a < b); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    // Canonical rendering used by every report: lowest terms, denominator
    // always written, sign on the numerator ("0/1", "-1/3", "7/3").
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    std::int64_t num_;
    std::int64_t den_;

    void assign(std::int64_t num, std::int64_t den) {
        if (den == 0) throw InternalError("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        num_ = num;
        den_ = den;
    }

    static Rational reduced(__int128 num, __int128 den) {
        if (den == 0) throw InternalError("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        __int128 a = num < 0 ? -num : num;
        __int128 b = den;
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { num /= a; den /= a; }
        constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
        if (num < lo || num > hi || den > hi)
            throw InternalError("rational overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }
};

} // namespace fdtc

#endif
