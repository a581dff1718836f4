#pragma once

#include "crystalline/fcrystal.hpp"
#include "crystalline/strata.hpp"

namespace crystalline {

// The homogeneous Artin-Schreier system x = A x^{[p]} with A an n x n
// matrix over F_q (entries at precision m = 1).
struct ASInstance {
    GrMat A;  // square, m = 1
    int n() const { return A.rows(); }
};

// dim over F_p of the solution space over an algebraic closure: rank over
// F_q of the stable twisted product A * A^{[p]} * ... (n*d factors).
long long as_dimension(const ASInstance& inst);

// Independent oracle: enumerate x over F_{q^e} for e = 1..max_ext, count the
// solutions, check the counts are p-powers, and return log_p of the
// stabilized count. NotStabilized if the maximum is seen only once;
// CapExceeded when the enumeration is too large.
long long brute_force_as_dimension(const ASInstance& inst, int max_ext);

// The rank-2n, twist-1 crystal of Corollary 3: g * diag(I_n, p I_n) with g
// the entrywise Teichmuller lift of [[A, I],[I, 0]]. Requires m > n so the
// determinant valuation n stays below the precision.
FCrystal corollary3_crystal(const ASInstance& inst, int m);

// The Corollary 3 construction applied to a family: [[lift(A), p I],[I, 0]]
// with coefficientwise Teichmuller lift at precision m. Fine for p-rank
// comparisons, which only see the mod-p reduction.
FamilyCrystal corollary3_family(const FamilyCrystal& fam_of_A, int m);

// Per-point as_dimension of a family of A-matrices (a FamilyCrystal at
// m = 1): strata Y_t keyed by dimension. Reuses the scan report shape with
// prank_strata holding the Y_t (newton/break strata left empty).
StratumReport as_stratify(const FamilyCrystal& fam_of_A, int max_degree);

}  // namespace crystalline
