#ifndef ULTRA_RATIONAL_HPP
#define ULTRA_RATIONAL_HPP

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "ultra/errors.hpp"

namespace ultra {

/// Exact rational exponent. Used by the solver for period detection and by
/// the CLI to keep "p/q" arguments exact until evaluation.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw DomainError("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    static Rational integer(long long n) { return Rational(n, 1); }

    /// Exact conversion when the double is an integer of reasonable size.
    static std::optional<Rational> from_integral(double x) {
        if (!std::isfinite(x)) return std::nullopt;
        if (x != std::floor(x)) return std::nullopt;
        if (std::abs(x) > 1e15) return std::nullopt;
        return Rational::integer(static_cast<long long>(x));
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    Rational operator-() const { return Rational(-num, den); }
    Rational operator-(const Rational& o) const {
        return Rational(num * o.den - o.num * den, den * o.den);
    }
    Rational operator+(const Rational& o) const {
        return Rational(num * o.den + o.num * den, den * o.den);
    }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

/// Numerators of two rationals brought to their common denominator;
/// these integer counts drive root enumeration for rational exponents.
struct CommonNumerators {
    long long a_num = 0;
    long long b_num = 0;
    long long den = 1;
};

inline CommonNumerators common_numerators(const Rational& a, const Rational& b) {
    long long d = std::lcm(a.den, b.den);
    return {a.num * (d / a.den), b.num * (d / b.den), d};
}

} // namespace ultra

#endif
