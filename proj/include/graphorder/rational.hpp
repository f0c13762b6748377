#pragma once

#include <cstdint>
#include <string>

#include "graphorder/error.hpp"

namespace graphorder {

// Exact non-negative rational. Average degree E/V is kept as a rational so
// that hot/cold classification (degree >= avg) and group boundaries (32*avg,
// avg/2, ...) never suffer from float rounding. Comparisons go through
// 128-bit cross products, so degree * denominator cannot overflow.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    constexpr Rational() = default;
    constexpr Rational(std::uint64_t n, std::uint64_t d) : num(n), den(d) {}

    static Rational make(std::uint64_t n, std::uint64_t d) {
        if (d == 0) throw ParameterError("rational with zero denominator");
        return Rational{n, d};
    }

    static constexpr Rational from_integer(std::uint64_t n) { return Rational{n, 1}; }

    constexpr bool is_zero() const { return num == 0; }

    constexpr Rational scaled(std::uint64_t factor) const { return Rational{num * factor, den}; }
    constexpr Rational halved() const { return Rational{num, den * 2}; }

    // Smallest integer >= this.
    constexpr std::uint64_t ceil() const { return (num + den - 1) / den; }
    constexpr std::uint64_t floor() const { return num / den; }
    constexpr bool is_integer() const { return num % den == 0; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

constexpr bool operator==(Rational a, Rational b) {
    using u128 = unsigned __int128;
    return static_cast<u128>(a.num) * b.den == static_cast<u128>(b.num) * a.den;
}
constexpr bool operator!=(Rational a, Rational b) { return !(a == b); }
constexpr bool operator<(Rational a, Rational b) {
    using u128 = unsigned __int128;
    return static_cast<u128>(a.num) * b.den < static_cast<u128>(b.num) * a.den;
}
constexpr bool operator<=(Rational a, Rational b) { return !(b < a); }
constexpr bool operator>(Rational a, Rational b) { return b < a; }
constexpr bool operator>=(Rational a, Rational b) { return !(a < b); }

// degree <op> rational, exact.
constexpr bool degree_lt(std::uint64_t degree, Rational r) {
    using u128 = unsigned __int128;
    return static_cast<u128>(degree) * r.den < static_cast<u128>(r.num);
}
constexpr bool degree_ge(std::uint64_t degree, Rational r) { return !degree_lt(degree, r); }

} // namespace graphorder
