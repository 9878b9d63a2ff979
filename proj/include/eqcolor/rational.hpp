#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace eqcolor {

// Exact fraction with 64-bit parts.  Kept normalized (gcd 1, den > 0).
// Comparisons cross-multiply in 128 bits so densities never go through
// floating point.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
};

// Best rational approximation of x with denominator <= max_den, by
// continued fractions.  Thresholds arrive as short decimals (3.5, 5.205),
// so this recovers the intended fraction and lets comparisons stay exact.
Rational rational_from_double(double x, std::int64_t max_den = 1000000);

}  // namespace eqcolor
