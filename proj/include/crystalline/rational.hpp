#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "crystalline/error.hpp"

namespace crystalline {

// Exact rational with 64-bit components, always normalized with den > 0.
// Slopes and polygon ordinates stay tiny at desk scale, so no wide arithmetic.
struct Rat {
    long long num = 0;
    long long den = 1;

    constexpr Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) fail(Errc::internal, "rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_integer() const { return den == 1; }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
    friend Rat operator*(long long k, const Rat& a) { return Rat(k * a.num, a.den); }
    friend Rat operator/(const Rat& a, long long k) { return Rat(a.num, a.den * k); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        return a.num * b.den <=> b.num * a.den;
    }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace crystalline
