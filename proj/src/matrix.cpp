#include "crystalline/matrix.hpp"

#include <algorithm>

#include "crystalline/caps.hpp"

namespace crystalline {

GrMat GrMat::identity(const FieldParams& fp, int n) {
    GrMat m(fp, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GrElt::one(fp);
    return m;
}

GrMat mat_mul(const GrMat& a, const GrMat& b) {
    if (!a.params().same_ring(b.params()) || a.cols() != b.rows())
        fail(Errc::param_mismatch, "matrix product shape or ring mismatch");
    GrMat r(a.params(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const GrElt& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j)
                r.at(i, j) = gr_add(r.at(i, j), gr_mul(aik, b.at(k, j)));
        }
    return r;
}

GrMat mat_add(const GrMat& a, const GrMat& b) {
    if (!a.params().same_ring(b.params()) || a.rows() != b.rows() || a.cols() != b.cols())
        fail(Errc::param_mismatch, "matrix sum shape or ring mismatch");
    GrMat r(a.params(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = gr_add(a.at(i, j), b.at(i, j));
    return r;
}

GrMat kronecker(const GrMat& a, const GrMat& b) {
    if (!a.params().same_ring(b.params()))
        fail(Errc::param_mismatch, "Kronecker product ring mismatch");
    GrMat r(a.params(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = gr_mul(a.at(i, j), b.at(k, l));
        }
    return r;
}

GrMat frobenius_entrywise(const GrMat& a, long long k) {
    GrMat r(a.params(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = frobenius(a.at(i, j), k);
    return r;
}

GrMat embed_entrywise(const GrMat& a, int big_d) {
    const FieldParams& tgt = field_params(a.params().p, big_d, a.params().m);
    GrMat r(tgt, a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = embed(a.at(i, j), big_d);
    return r;
}

std::vector<GrElt> char_poly(const GrMat& a) {
    if (a.rows() != a.cols()) fail(Errc::param_mismatch, "characteristic polynomial of a non-square matrix");
    const FieldParams& fp = a.params();
    int n = a.rows();
    // Berkowitz: grow the principal submatrix one row at a time; the new
    // coefficient vector is a Toeplitz product of the previous one.
    std::vector<GrElt> vec{GrElt::one(fp)};  // leading coefficient first
    for (int k = 1; k <= n; ++k) {
        std::vector<GrElt> t(static_cast<size_t>(k) + 1, GrElt::zero(fp));
        t[0] = GrElt::one(fp);
        t[1] = gr_neg(a.at(k - 1, k - 1));
        if (k >= 2) {
            // s starts as the column above the new diagonal entry
            std::vector<GrElt> s(static_cast<size_t>(k) - 1, GrElt::zero(fp));
            for (int i = 0; i < k - 1; ++i) s[i] = a.at(i, k - 1);
            for (int i = 2; i <= k; ++i) {
                GrElt dot = GrElt::zero(fp);
                for (int j = 0; j < k - 1; ++j) dot = gr_add(dot, gr_mul(a.at(k - 1, j), s[j]));
                t[i] = gr_neg(dot);
                if (i < k) {
                    std::vector<GrElt> ns(static_cast<size_t>(k) - 1, GrElt::zero(fp));
                    for (int r = 0; r < k - 1; ++r)
                        for (int c = 0; c < k - 1; ++c)
                            ns[r] = gr_add(ns[r], gr_mul(a.at(r, c), s[c]));
                    s = std::move(ns);
                }
            }
        }
        std::vector<GrElt> nv(static_cast<size_t>(k) + 1, GrElt::zero(fp));
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j < k && j <= i; ++j)
                if (i - j <= k) nv[i] = gr_add(nv[i], gr_mul(t[i - j], vec[j]));
        vec = std::move(nv);
    }
    // convert to low-degree-first
    std::vector<GrElt> out(vec.rbegin(), vec.rend());
    return out;
}

GrElt determinant(const GrMat& a) {
    int n = a.rows();
    if (n == 0) return GrElt::one(a.params());
    auto cp = char_poly(a);
    GrElt c0 = cp[0];  // det(-A) = (-1)^n det(A)
    return (n % 2 == 0) ? c0 : gr_neg(c0);
}

namespace {

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

}  // namespace

GrMat compound(const GrMat& a, int i) {
    if (a.rows() != a.cols()) fail(Errc::param_mismatch, "compound of a non-square matrix");
    int n = a.rows();
    if (i < 0 || i > n) fail(Errc::index_out_of_range, "compound index out of range");
    auto subs = subsets(n, i);
    if (static_cast<int>(subs.size()) > caps().max_compound)
        fail(Errc::cap_exceeded, "compound dimension exceeds the configured cap");
    GrMat r(a.params(), static_cast<int>(subs.size()), static_cast<int>(subs.size()));
    for (size_t si = 0; si < subs.size(); ++si)
        for (size_t sj = 0; sj < subs.size(); ++sj) {
            GrMat minor(a.params(), i, i);
            for (int x = 0; x < i; ++x)
                for (int y = 0; y < i; ++y) minor.at(x, y) = a.at(subs[si][x], subs[sj][y]);
            r.at(static_cast<int>(si), static_cast<int>(sj)) = determinant(minor);
        }
    return r;
}

bool is_unit_matrix(const GrMat& a) {
    return a.rows() == a.cols() && valuation(determinant(a)) == 0;
}

GrMat mat_inverse(const GrMat& a) {
    if (a.rows() != a.cols()) fail(Errc::param_mismatch, "inverse of a non-square matrix");
    const FieldParams& fp = a.params();
    int n = a.rows();
    GrMat w = a;
    GrMat inv = GrMat::identity(fp, n);
    for (int col = 0; col < n; ++col) {
        int pr = -1;
        for (int i = col; i < n; ++i)
            if (valuation(w.at(i, col)) == 0) { pr = i; break; }
        if (pr < 0) fail(Errc::non_unit, "matrix is not invertible over the Galois ring");
        for (int j = 0; j < n; ++j) {
            std::swap(w.at(col, j), w.at(pr, j));
            std::swap(inv.at(col, j), inv.at(pr, j));
        }
        GrElt piv_inv = gr_inv(w.at(col, col));
        for (int j = 0; j < n; ++j) {
            w.at(col, j) = gr_mul(w.at(col, j), piv_inv);
            inv.at(col, j) = gr_mul(inv.at(col, j), piv_inv);
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || w.at(i, col).is_zero()) continue;
            GrElt f = w.at(i, col);
            for (int j = 0; j < n; ++j) {
                w.at(i, j) = gr_sub(w.at(i, j), gr_mul(f, w.at(col, j)));
                inv.at(i, j) = gr_sub(inv.at(i, j), gr_mul(f, inv.at(col, j)));
            }
        }
    }
    return inv;
}

int ff_rank(const GrMat& a) {
    if (a.params().m != 1) fail(Errc::param_mismatch, "ff_rank expects residue-field entries");
    GrMat w = a;
    int rank = 0;
    for (int col = 0; col < w.cols() && rank < w.rows(); ++col) {
        int pr = -1;
        for (int i = rank; i < w.rows(); ++i)
            if (!w.at(i, col).is_zero()) { pr = i; break; }
        if (pr < 0) continue;
        for (int j = 0; j < w.cols(); ++j) std::swap(w.at(rank, j), w.at(pr, j));
        GrElt piv_inv = gr_inv(w.at(rank, col));
        for (int j = 0; j < w.cols(); ++j) w.at(rank, j) = gr_mul(w.at(rank, j), piv_inv);
        for (int i = 0; i < w.rows(); ++i) {
            if (i == rank || w.at(i, col).is_zero()) continue;
            GrElt f = w.at(i, col);
            for (int j = 0; j < w.cols(); ++j)
                w.at(i, j) = gr_sub(w.at(i, j), gr_mul(f, w.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

}  // namespace crystalline
