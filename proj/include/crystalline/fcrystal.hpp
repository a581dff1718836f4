#pragma once

#include "crystalline/matrix.hpp"

namespace crystalline {

// A rank-r F^n-crystal over F_{p^d} at precision m: the twist n together with
// the r x r semilinear matrix, column convention F(e_j) = sum_i M[i][j] e_i,
// so apply(x) = M * sigma^n(coords of x).
class FCrystal {
public:
    // Validates: square matrix, shared ring, rank cap, det valuation < m.
    FCrystal(int twist, GrMat matrix);

    const FieldParams& params() const { return mat_.params(); }
    int twist() const { return twist_; }
    int rank() const { return mat_.rows(); }
    int precision() const { return mat_.params().m; }
    const GrMat& matrix() const { return mat_; }
    int det_valuation() const { return det_val_; }

    std::vector<GrElt> apply(const std::vector<GrElt>& x) const;

private:
    int twist_;
    GrMat mat_;
    int det_val_;
};

// Standard simple crystal E(a/b): rank b, pure Newton slope a/b, built as
// multiplication by T^n on Z_p[T]/(T^b - p^a), twisted by sigma^n.
// InvalidSlope if gcd(a, b) != 1; InsufficientPrecision if m <= a.
FCrystal standard_E(long long a, long long b, int twist, long long p, int d, int m);

FCrystal direct_sum(const FCrystal& c1, const FCrystal& c2);

// i-th exterior power; the twist is unchanged (F acts on wedge coordinates
// through the same phi^n). For i = 0 returns the rank-1 unit crystal.
FCrystal exterior_power(const FCrystal& c, int i);

FCrystal tensor_product(const FCrystal& c1, const FCrystal& c2);
FCrystal tensor_power(const FCrystal& c, int e);

// Matrix of F^s without crystal validation: M sigma^n(M) ... sigma^{(s-1)n}(M).
GrMat iterate_matrix(const GrMat& m, int twist, int s);

// (M, F^s): twist s*n, matrix M sigma^n(M) ... sigma^{(s-1)n}(M).
FCrystal iterate(const FCrystal& c, int s);

// Re-embeds the crystal over F_{p^d'}, d | d'. Newton polygon is unchanged.
FCrystal base_change(const FCrystal& c, int big_d);

}  // namespace crystalline
