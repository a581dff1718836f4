#pragma once

#include <string>
#include <utility>
#include <vector>

#include "crystalline/fcrystal.hpp"
#include "crystalline/polygon.hpp"
#include "crystalline/slopes.hpp"

namespace crystalline {

// One monomial of a family entry: coeff * prod_i t_i^{exponents[i]}, where
// t_i denotes the Teichmuller lift of the i-th coordinate.
struct Monomial {
    std::vector<int> exponents;
    GrElt coeff;
};

using PolyEntry = std::vector<Monomial>;

// A family of F^n-crystals over A^k / F_{p^d}: matrix entries are
// polynomials in the Teichmuller lifts of the coordinates with W_m(F_{p^d})
// coefficients.
class FamilyCrystal {
public:
    FamilyCrystal(const FieldParams& fp, int twist, int rank,
                  std::vector<std::string> vars, std::vector<PolyEntry> entries);

    const FieldParams& params() const { return *fp_; }
    int twist() const { return twist_; }
    int rank() const { return rank_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    const PolyEntry& entry(int i, int j) const { return entries_[static_cast<size_t>(i) * rank_ + j]; }

private:
    const FieldParams* fp_;
    int twist_;
    int rank_;
    std::vector<std::string> vars_;
    std::vector<PolyEntry> entries_;  // rank x rank, row-major
};

// A closed point of A^k / F_q: the Frobenius orbit of a coordinate tuple
// over F_{q^e}, stored by its lexicographically least representative.
struct ClosedPoint {
    int ext_degree = 1;          // e: orbit size, coords live in F_{q^e}
    std::vector<FFElt> coords;   // k elements of F_{p^{d*e}}, m = 1
};

// One representative per Frobenius orbit of A^k(F_{q^e}) for e <= max_degree,
// ordered by degree then lexicographically. CapExceeded when q^{D*k} is too big.
std::vector<ClosedPoint> enumerate_closed_points(const FamilyCrystal& fam, int max_degree);

// Specialize the family matrix at a closed point: coefficients embed into
// GR(p^m, d*e) and each variable becomes the Teichmuller lift of its
// coordinate. No crystal validation.
GrMat evaluate_matrix_at(const FamilyCrystal& fam, const ClosedPoint& pt);

// Same, wrapped as a crystal. NotACrystal if det vanishes mod p^m.
FCrystal evaluate_at(const FamilyCrystal& fam, const ClosedPoint& pt);

struct PointRecord {
    ClosedPoint point;
    bool ok = false;
    Errc error = Errc::ok;     // set when !ok
    std::string error_detail;
    Polygon newton;            // valid when ok
    long long prank = 0;       // valid when ok
};

// Stratification of the sampled points. Strata hold indices into `records`
// (enumeration order); keys are listed in deterministic order.
struct StratumReport {
    std::vector<PointRecord> records;
    std::vector<std::pair<Polygon, std::vector<size_t>>> newton_strata;
    std::vector<std::pair<BreakPoint, std::vector<size_t>>> break_strata;
    std::vector<std::pair<long long, std::vector<size_t>>> prank_strata;
};

// Evaluate the family at every sampled point (optionally in parallel) and
// assemble the Newton / break-point / p-rank strata. Fails only if every
// point fails; per-point errors are recorded.
StratumReport scan(const FamilyCrystal& fam, int max_degree, int jobs = 1);

// Members of S_{>=nu} among the sampled points, plus an internal
// monotonicity check (lies_above is transitive on the sample).
// Returns true iff the consistency check passes; fills `members` with
// record indices when non-null.
bool check_specialization(const StratumReport& report, const Polygon& nu,
                          std::vector<size_t>* members = nullptr);

// Pointwise Step-1 identities for P0 = (a, b):
//  (1) (a,b) is a break point of NP(C_s)  <=>  (1,b) is one of NP(wedge^a C_s);
//  (2) for points of integer slopes lying above nu1, membership in S_{P0}
//      matches NOT lies_above(NP, nu2), with nu1/nu2 the two Step-1 polygons
//      built from that point's endpoint.
// Returns true iff every sampled point passes; `detail` gets the first
// failure description.
bool verify_step1_identities(const FamilyCrystal& fam, long long a, long long b,
                             int max_degree, std::string* detail = nullptr);

}  // namespace crystalline
