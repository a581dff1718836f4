#pragma once

#include "crystalline/fcrystal.hpp"
#include "crystalline/polygon.hpp"

namespace crystalline {

// Hodge slopes = elementary divisor exponents of the matrix over the local
// ring GR(p^m, d), by Smith-normal-form reduction with minimal-valuation
// pivoting. InsufficientPrecision if a residual block is 0 mod p^m while a
// rank deficit remains.
Polygon hodge_polygon(const FCrystal& c);

struct NewtonResult {
    Polygon polygon;
    // Smallest precision at which the certified hull is already determined.
    int guaranteed_slope_precision = 0;
};

// Newton slopes via linearization: descend to the smallest subfield carrying
// the matrix, iterate to a sigma-trivial twist, and take the p-adic lower
// convex hull of the characteristic polynomial's coefficient valuations.
// InsufficientPrecision when the hull cannot be certified at precision m.
NewtonResult newton_compute(const FCrystal& c);
Polygon newton_polygon(const FCrystal& c);

// Multiplicity of Newton slope 0.
long long p_rank(const FCrystal& c);

// F_{p^n}-dimension of the Frobenius-fixed space of the mod-p reduction,
// computed as the stable rank of the twisted residue product. For twist
// n = 1 this is the classical fixed-space dimension over F_p.
long long fixed_point_dimension(const FCrystal& c);

// Bounded divisibility certificate: every entry of iterate(c, s) has
// valuation >= floor(s * lambda) for 1 <= s <= s_max.
bool is_divisible_by(const FCrystal& c, const Rat& lambda, int s_max);

}  // namespace crystalline
