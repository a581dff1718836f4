#include "crystalline/fcrystal.hpp"

#include <numeric>

#include "crystalline/caps.hpp"

namespace crystalline {

FCrystal::FCrystal(int twist, GrMat matrix) : twist_(twist), mat_(std::move(matrix)) {
    if (twist_ < 1) fail(Errc::param_mismatch, "twist must be >= 1");
    if (mat_.rows() != mat_.cols() || mat_.rows() < 1)
        fail(Errc::param_mismatch, "crystal matrix must be square and nonempty");
    if (mat_.rows() > caps().max_compound)
        fail(Errc::cap_exceeded, "crystal rank exceeds the configured cap");
    det_val_ = valuation(determinant(mat_));
    if (det_val_ >= mat_.params().m)
        fail(Errc::not_a_crystal, "det = 0 mod p^m: nondegeneracy undetermined at this precision");
}

std::vector<GrElt> FCrystal::apply(const std::vector<GrElt>& x) const {
    if (static_cast<int>(x.size()) != rank()) fail(Errc::param_mismatch, "vector length != rank");
    std::vector<GrElt> y(rank(), GrElt::zero(params()));
    for (int j = 0; j < rank(); ++j) {
        GrElt sx = frobenius(x[j], twist_);
        if (sx.is_zero()) continue;
        for (int i = 0; i < rank(); ++i) y[i] = gr_add(y[i], gr_mul(mat_.at(i, j), sx));
    }
    return y;
}

FCrystal standard_E(long long a, long long b, int twist, long long p, int d, int m) {
    if (b < 1 || a < 0 || std::gcd(a, b) != 1) fail(Errc::invalid_slope, "E(a/b) needs gcd(a,b) = 1, b >= 1");
    if (m <= a)
        fail(Errc::insufficient_precision, "precision m must exceed a to determine p^a");
    const FieldParams& fp = field_params(p, d, m);
    GrMat mat(fp, static_cast<int>(b), static_cast<int>(b));
    // multiplication by T^twist on the basis 1, T, ..., T^{b-1}, with T^b = p^a
    for (long long j = 0; j < b; ++j) {
        long long deg = j + twist;
        long long row = deg % b;
        long long exp = a * (deg / b);
        long long coeff = 1;
        for (long long i = 0; i < exp && coeff != 0; ++i) {
            coeff *= p;
            if (coeff >= fp.pm) coeff = 0;
        }
        mat.at(static_cast<int>(row), static_cast<int>(j)) = GrElt::from_int(fp, coeff);
    }
    return FCrystal(twist, std::move(mat));
}

FCrystal direct_sum(const FCrystal& c1, const FCrystal& c2) {
    if (!c1.params().same_ring(c2.params()) || c1.twist() != c2.twist())
        fail(Errc::param_mismatch, "direct sum needs matching base, twist and precision");
    GrMat m(c1.params(), c1.rank() + c2.rank(), c1.rank() + c2.rank());
    for (int i = 0; i < c1.rank(); ++i)
        for (int j = 0; j < c1.rank(); ++j) m.at(i, j) = c1.matrix().at(i, j);
    for (int i = 0; i < c2.rank(); ++i)
        for (int j = 0; j < c2.rank(); ++j) m.at(c1.rank() + i, c1.rank() + j) = c2.matrix().at(i, j);
    return FCrystal(c1.twist(), std::move(m));
}

FCrystal exterior_power(const FCrystal& c, int i) {
    if (i < 0 || i > c.rank()) fail(Errc::index_out_of_range, "exterior power index out of range");
    if (i == 0) {
        GrMat m(c.params(), 1, 1);
        m.at(0, 0) = GrElt::one(c.params());
        return FCrystal(c.twist(), std::move(m));
    }
    // wedge of F = M phi^n applies phi^n coordinatewise: the twist is unchanged
    return FCrystal(c.twist(), compound(c.matrix(), i));
}

FCrystal tensor_product(const FCrystal& c1, const FCrystal& c2) {
    if (!c1.params().same_ring(c2.params()) || c1.twist() != c2.twist())
        fail(Errc::param_mismatch, "tensor product needs matching base, twist and precision");
    return FCrystal(c1.twist(), kronecker(c1.matrix(), c2.matrix()));
}

FCrystal tensor_power(const FCrystal& c, int e) {
    if (e < 1) fail(Errc::index_out_of_range, "tensor power exponent must be >= 1");
    FCrystal r = c;
    for (int i = 1; i < e; ++i) r = tensor_product(r, c);
    return r;
}

GrMat iterate_matrix(const GrMat& m, int twist, int s) {
    GrMat prod = m;
    for (int i = 1; i < s; ++i) prod = mat_mul(prod, frobenius_entrywise(m, static_cast<long long>(i) * twist));
    return prod;
}

FCrystal iterate(const FCrystal& c, int s) {
    if (s < 1) fail(Errc::index_out_of_range, "iterate count must be >= 1");
    if (s == 1) return c;
    return FCrystal(s * c.twist(), iterate_matrix(c.matrix(), c.twist(), s));
}

FCrystal base_change(const FCrystal& c, int big_d) {
    if (big_d % c.params().d != 0) fail(Errc::not_a_subfield, "base change target is not an extension");
    if (big_d == c.params().d) return c;
    return FCrystal(c.twist(), embed_entrywise(c.matrix(), big_d));
}

}  // namespace crystalline
