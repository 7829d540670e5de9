// rational.hpp — Exact rational arithmetic for commensurability analysis

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace hotline {

struct Rational {
    std::int64_t num{0};
    std::int64_t den{1};

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool positive() const { return num > 0; }
};

inline std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
    const std::int64_t g = std::gcd(a, b);
    const std::int64_t q = a / g;
    if (b != 0 && q > INT64_MAX / b)
        throw std::overflow_error("lcm_checked: overflow");
    return q * b;
}

// Least common multiple of positive rationals: lcm of numerators over gcd of
// denominators, with inputs in lowest terms.
inline Rational lcm_of_rationals(const Rational& a, const Rational& b) {
    return Rational(lcm_checked(a.num, b.num), std::gcd(a.den, b.den));
}

} // namespace hotline
