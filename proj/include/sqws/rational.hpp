#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sqws {

// Exact fraction on 64-bit parts with 128-bit intermediates. Normalized form:
// den > 0, gcd(|num|, den) = 1. The sink-time distributions this backs have
// denominators in the dozens, so overflow is a hard error rather than a mode
// to engineer around.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
        num = g ? n / g : n;
        den = g ? d / g : d;
    }

    static Rational from_i128(__int128 n, __int128 d);

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_i128(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                         static_cast<__int128>(a.den) * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_i128(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                         static_cast<__int128>(a.den) * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_i128(static_cast<__int128>(a.num) * b.num,
                         static_cast<__int128>(a.den) * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::domain_error("rational division by zero");
        return from_i128(static_cast<__int128>(a.num) * b.den,
                         static_cast<__int128>(a.den) * b.num);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

inline Rational Rational::from_i128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 an = n < 0 ? -n : n;
    __int128 g = d;
    while (an) { __int128 t = g % an; g = an; an = t; }  // gcd(|n|, d)
    if (g > 1) { n /= g; d /= g; }
    constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
    if (n < lo || n > hi || d > hi)
        throw std::overflow_error("rational exceeds 64-bit parts");
    Rational r;
    r.num = static_cast<std::int64_t>(n);
    r.den = static_cast<std::int64_t>(d);
    return r;
}

}  // namespace sqws
