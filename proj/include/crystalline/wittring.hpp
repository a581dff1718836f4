#pragma once

#include <cstdint>
#include <vector>

#include "crystalline/error.hpp"

namespace crystalline {

// Arithmetic context for W_m(F_{p^d}) realized as the Galois ring
// Z/p^m[u]/(fhat), where fhat is the Hensel lift of the degree-d modulus
// whose roots are Teichmuller; with that lift, Frobenius is u -> u^p.
// Instances are owned by a process-wide registry and never freed, so raw
// references stay valid for the lifetime of the program.
struct FieldParams {
    long long p = 2;
    int d = 1;
    int m = 1;
    long long pm = 2;  // p^m

    // Monic degree-d modulus over F_p (lexicographically least irreducible),
    // low coefficients first: x^d + modulus[d-1] x^{d-1} + ... + modulus[0].
    std::vector<long long> modulus;
    // Teichmuller-root lift of the modulus, coefficients mod p^m.
    std::vector<long long> lifted;
    // u^{d+i} mod lifted for i = 0..d-2, used to fold products back to degree < d.
    std::vector<std::vector<long long>> upow;
    // frob[k] is the d x d matrix of sigma^k over Z/p^m (column j = coords of sigma^k(u^j)).
    std::vector<std::vector<std::vector<long long>>> frob;

    bool same_ring(const FieldParams& o) const { return p == o.p && d == o.d && m == o.m; }
};

// Memoized lookup; thread-safe on first use.
const FieldParams& field_params(long long p, int d, int m);

// An element of GR(p^m, d); with m = 1 this is an element of F_{p^d}.
class GrElt {
public:
    GrElt() : fp_(&field_params(2, 1, 1)), c_(1, 0) {}
    GrElt(const FieldParams& fp, std::vector<long long> coords);

    static GrElt zero(const FieldParams& fp);
    static GrElt one(const FieldParams& fp);
    static GrElt from_int(const FieldParams& fp, long long v);

    const FieldParams& params() const { return *fp_; }
    const std::vector<long long>& coords() const { return c_; }
    bool is_zero() const;

    friend bool operator==(const GrElt& a, const GrElt& b) {
        return a.fp_->same_ring(*b.fp_) && a.c_ == b.c_;
    }

private:
    const FieldParams* fp_;
    std::vector<long long> c_;  // size d, each in [0, p^m)
};

using FFElt = GrElt;  // finite-field element: a GrElt at precision m = 1

GrElt gr_add(const GrElt& a, const GrElt& b);
GrElt gr_sub(const GrElt& a, const GrElt& b);
GrElt gr_neg(const GrElt& a);
GrElt gr_mul(const GrElt& a, const GrElt& b);
GrElt gr_inv(const GrElt& a);  // NonUnit if valuation(a) >= 1
GrElt gr_pow(const GrElt& a, long long e);

// sigma^k; k may be any integer >= 0 (reduced mod d).
GrElt frobenius(const GrElt& a, long long k = 1);

// Largest v <= m with a = 0 mod p^v; returns m for a = 0 ("undetermined >= m").
int valuation(const GrElt& a);

// Exact division by p^v; requires valuation(a) >= v. The result is only
// determined mod p^{m-v}; callers must account for the lost precision.
GrElt divide_by_p(const GrElt& a, int v);

FFElt residue(const GrElt& a);
GrElt change_precision(const GrElt& a, int m_new);  // truncation only

// Teichmuller lift of a field element into GR(p^m, d).
GrElt teichmuller(const FFElt& x, int m);

// Canonical embedding GR(p^m, d) -> GR(p^m, D) for d | D (NotASubfield otherwise).
GrElt embed(const GrElt& a, int big_d);

// Inverse of embed on the sigma^{d_sub}-fixed subring: expresses a as an
// element of GR(p^m, d_sub). Internal error if a is not fixed by sigma^{d_sub}.
GrElt project_to_subring(const GrElt& a, int d_sub);

// All p^d elements of F_{p^d} in deterministic (coordinate-lexicographic) order.
std::vector<FFElt> field_elements(long long p, int d);

}  // namespace crystalline
