#include "crystalline/slopes.hpp"

#include <algorithm>

namespace crystalline {

Polygon hodge_polygon(const FCrystal& c) {
    const FieldParams& fp = c.params();
    int n = c.rank();
    int m = fp.m;
    GrMat w = c.matrix();
    std::vector<Rat> exps;
    for (int k = 0; k < n; ++k) {
        // pivot: any entry of minimal valuation in the trailing block, row-major ties
        int best_i = -1, best_j = -1, best_v = m;
        for (int i = k; i < n; ++i)
            for (int j = k; j < n; ++j) {
                int v = valuation(w.at(i, j));
                if (v < best_v) { best_v = v; best_i = i; best_j = j; }
            }
        if (best_v >= m)
            fail(Errc::insufficient_precision,
                 "elementary divisors undetermined: residual block is 0 mod p^m");
        if (best_i != k)
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(best_i, j));
        if (best_j != k)
            for (int i = 0; i < n; ++i) std::swap(w.at(i, k), w.at(i, best_j));
        int v = best_v;
        GrElt unit_inv = gr_inv(divide_by_p(w.at(k, k), v));
        for (int i = k + 1; i < n; ++i) {
            if (w.at(i, k).is_zero()) continue;
            GrElt q = gr_mul(divide_by_p(w.at(i, k), v), unit_inv);
            for (int j = k; j < n; ++j) w.at(i, j) = gr_sub(w.at(i, j), gr_mul(q, w.at(k, j)));
        }
        for (int j = k + 1; j < n; ++j) {
            if (w.at(k, j).is_zero()) continue;
            GrElt q = gr_mul(divide_by_p(w.at(k, j), v), unit_inv);
            for (int i = k; i < n; ++i) w.at(i, j) = gr_sub(w.at(i, j), gr_mul(q, w.at(i, k)));
        }
        exps.emplace_back(v);
    }
    return Polygon::from_slopes(PolyKind::hodge, std::move(exps));
}

namespace {

// Smallest divisor d0 of d such that every entry is fixed by sigma^{d0};
// the matrix then descends to GR(p^m, d0) without changing the Newton data.
GrMat descend_matrix(const GrMat& m) {
    int d = m.params().d;
    for (int d0 = 1; d0 < d; ++d0) {
        if (d % d0 != 0) continue;
        bool fixed = true;
        for (int i = 0; i < m.rows() && fixed; ++i)
            for (int j = 0; j < m.cols() && fixed; ++j)
                if (!(frobenius(m.at(i, j), d0) == m.at(i, j))) fixed = false;
        if (!fixed) continue;
        GrMat small(field_params(m.params().p, d0, m.params().m), m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) small.at(i, j) = project_to_subring(m.at(i, j), d0);
        return small;
    }
    return m;
}

}  // namespace

NewtonResult newton_compute(const FCrystal& c) {
    int n = c.twist();
    GrMat mat = descend_matrix(c.matrix());
    const FieldParams& fp = mat.params();
    int d = fp.d;
    int m = fp.m;
    int r = c.rank();
    int e = d / std::gcd(static_cast<long long>(n), static_cast<long long>(d));  // least e with d | n e
    GrMat lin = iterate_matrix(mat, n, e);
    std::vector<GrElt> cp = char_poly(lin);

    // hull of (j, val(coeff of x^{r-j})), j = 0..r
    std::vector<long long> vals(r + 1);
    for (int j = 0; j <= r; ++j) vals[j] = valuation(cp[r - j]);
    // The constant term is +/- det(lin) = +/- prod_k sigma^{kn}(det),
    // so its valuation is exactly e * val(det) even when that reaches m.
    vals[r] = static_cast<long long>(e) * c.det_valuation();
    std::vector<int> hull;  // indices of lower-hull vertices
    for (int j = 0; j <= r; ++j) {
        while (hull.size() >= 2) {
            int a = hull[hull.size() - 2], b = hull[hull.size() - 1];
            // pop b if it lies on or above segment a..j
            if ((vals[b] - vals[a]) * (j - a) >= (vals[j] - vals[a]) * (b - a))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(j);
    }

    auto hull_value = [&](int j) -> Rat {
        for (size_t k = 0; k + 1 < hull.size(); ++k) {
            int a = hull[k], b = hull[k + 1];
            if (j >= a && j <= b)
                return Rat(vals[a]) + Rat(vals[b] - vals[a], b - a) * Rat(j - a);
        }
        return Rat(vals[hull.back()]);
    };

    // certification at precision m (the endpoint j = r is exact, see above)
    long long max_vertex_val = 0;
    for (int j : hull) {
        if (j != r && vals[j] >= m)
            fail(Errc::insufficient_precision, "Newton hull vertex undetermined at precision m");
        if (j != r) max_vertex_val = std::max(max_vertex_val, vals[j]);
    }
    long long needed = max_vertex_val + 1;
    for (int j = 0; j < r; ++j) {
        if (vals[j] < m) continue;
        Rat h = hull_value(j);
        if (!(Rat(static_cast<long long>(m)) > h))
            fail(Errc::insufficient_precision, "undetermined coefficient touches the Newton hull");
        // the undetermined point must clear the hull at the guaranteed precision too
        long long above = h.num / h.den + 1;
        needed = std::max(needed, above);
    }

    std::vector<Rat> slopes;
    for (size_t k = 0; k + 1 < hull.size(); ++k) {
        int a = hull[k], b = hull[k + 1];
        Rat s(vals[b] - vals[a], static_cast<long long>(b - a) * e);
        for (int t = 0; t < b - a; ++t) slopes.push_back(s);
    }
    NewtonResult res;
    res.polygon = Polygon::from_slopes(PolyKind::newton, std::move(slopes));
    res.guaranteed_slope_precision = static_cast<int>(needed);
    return res;
}

Polygon newton_polygon(const FCrystal& c) { return newton_compute(c).polygon; }

long long p_rank(const FCrystal& c) {
    const Polygon np = newton_polygon(c);
    const auto& segs = np.segments();
    if (!segs.empty() && segs.front().slope == Rat(0)) return segs.front().mult;
    return 0;
}

long long fixed_point_dimension(const FCrystal& c) {
    const FieldParams& fp = c.params();
    GrMat abar(field_params(fp.p, fp.d, 1), c.rank(), c.rank());
    for (int i = 0; i < c.rank(); ++i)
        for (int j = 0; j < c.rank(); ++j) abar.at(i, j) = residue(c.matrix().at(i, j));
    int factors = c.rank() * fp.d;
    GrMat prod = abar;
    for (int j = 1; j < factors; ++j)
        prod = mat_mul(prod, frobenius_entrywise(abar, static_cast<long long>(j) * c.twist()));
    return ff_rank(prod);
}

bool is_divisible_by(const FCrystal& c, const Rat& lambda, int s_max) {
    if (lambda.num < 0) fail(Errc::invalid_slope, "divisibility slope must be nonnegative");
    if (lambda.num == 0) return true;
    if (!(Rat(s_max) * lambda < Rat(c.precision())))
        fail(Errc::insufficient_precision, "s_max * lambda must be below the precision m");
    for (int s = 1; s <= s_max; ++s) {
        GrMat pw = iterate_matrix(c.matrix(), c.twist(), s);
        long long bound = (static_cast<long long>(s) * lambda.num) / lambda.den;  // floor(s*lambda)
        for (int i = 0; i < pw.rows(); ++i)
            for (int j = 0; j < pw.cols(); ++j)
                if (valuation(pw.at(i, j)) < bound) return false;
    }
    return true;
}

}  // namespace crystalline
