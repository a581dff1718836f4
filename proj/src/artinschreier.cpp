#include "crystalline/artinschreier.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "crystalline/caps.hpp"

namespace crystalline {

namespace {

void check_instance(const ASInstance& inst) {
    if (inst.A.rows() != inst.A.cols()) fail(Errc::param_mismatch, "A must be square");
    if (inst.A.rows() < 1) fail(Errc::param_mismatch, "A must be nonempty");
    if (inst.A.params().m != 1) fail(Errc::param_mismatch, "A must have entries at precision m = 1");
}

}  // namespace

long long as_dimension(const ASInstance& inst) {
    check_instance(inst);
    const int n = inst.n();
    const int d = inst.A.params().d;
    // A * A^{[p]} * A^{[p^2]} * ... with n*d factors: the semilinear kernel
    // filtration stabilizes within n steps, and d more cover the F_q twist.
    GrMat prod = inst.A;
    for (int j = 1; j < n * d; ++j) prod = mat_mul(prod, frobenius_entrywise(inst.A, j));
    return ff_rank(prod);
}

namespace {

// dim over F_p of {x in F_{q^E}^n : x = A x^{[p]}}: kernel of the F_p-linear
// map x -> x - A x^{[p]} after restriction of scalars.
long long kernel_dimension_over(const ASInstance& inst, int ext) {
    const int n = inst.n();
    const auto& base = inst.A.params();
    const int big_d = base.d * ext;
    if (big_d > 96) fail(Errc::cap_exceeded, "restriction of scalars degree too large");
    const FieldParams& big = field_params(base.p, big_d, 1);
    GrMat A = embed_entrywise(inst.A, big_d);
    const int N = n * big_d;
    GrMat L(field_params(base.p, 1, 1), N, N);
    std::vector<GrElt> x(static_cast<size_t>(n), GrElt::zero(big));
    for (int col = 0; col < N; ++col) {
        for (auto& xi : x) xi = GrElt::zero(big);
        std::vector<long long> coords(static_cast<size_t>(big_d), 0);
        coords[static_cast<size_t>(col % big_d)] = 1;
        x[static_cast<size_t>(col / big_d)] = GrElt(big, coords);
        for (int i = 0; i < n; ++i) {
            GrElt acc = x[static_cast<size_t>(i)];
            for (int j = 0; j < n; ++j)
                acc = gr_sub(acc, gr_mul(A.at(i, j), frobenius(x[static_cast<size_t>(j)], 1)));
            for (int k = 0; k < big_d; ++k)
                L.at(i * big_d + k, col) =
                    GrElt(L.params(), {acc.coords()[static_cast<size_t>(k)]});
        }
    }
    return N - ff_rank(L);
}

// Smallest extension degree guaranteed to carry the full solution space:
// Galois acts on it through an element of GL_n(F_p), whose order divides
// p^ceil(log_p n) * lcm(p^k - 1, k <= n).
int certificate_extension(long long p, int n) {
    long long e = 1;
    long long pk = 1;
    for (int k = 1; k <= n; ++k) {
        pk *= p;
        e = std::lcm(e, pk - 1);
    }
    long long pl = 1;
    while (pl < n) {
        pl *= p;
        e *= p;
    }
    return static_cast<int>(e);
}

}  // namespace

long long brute_force_as_dimension(const ASInstance& inst, int max_ext) {
    check_instance(inst);
    if (max_ext < 2) fail(Errc::param_mismatch, "need max_ext >= 2 to observe stabilization");
    const int n = inst.n();
    const auto& base = inst.A.params();

    long long best = -1;
    for (int e = 1; e <= max_ext; ++e) {
        const int big_d = base.d * e;
        long double size = 1;
        for (int i = 0; i < big_d * n; ++i) {
            size *= static_cast<long double>(base.p);
            if (size > static_cast<long double>(caps().max_enum))
                fail(Errc::cap_exceeded, "brute-force enumeration exceeds the cap");
        }
        GrMat A = embed_entrywise(inst.A, big_d);
        const auto elems = field_elements(base.p, big_d);
        std::vector<size_t> idx(static_cast<size_t>(n), 0);
        std::vector<FFElt> x(static_cast<size_t>(n), elems[0]);
        long long count = 0;
        bool done = false;
        while (!done) {
            for (int i = 0; i < n; ++i) x[static_cast<size_t>(i)] = elems[idx[static_cast<size_t>(i)]];
            bool sol = true;
            for (int i = 0; i < n && sol; ++i) {
                GrElt acc = GrElt::zero(A.params());
                for (int j = 0; j < n; ++j)
                    acc = gr_add(acc, gr_mul(A.at(i, j), frobenius(x[static_cast<size_t>(j)], 1)));
                sol = (acc == x[static_cast<size_t>(i)]);
            }
            if (sol) ++count;
            int pos = n - 1;
            while (pos >= 0) {
                if (++idx[static_cast<size_t>(pos)] < elems.size()) break;
                idx[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) done = true;
        }
        long long dim = 0;
        long long c = count;
        while (c > 1 && c % base.p == 0) {
            c /= base.p;
            ++dim;
        }
        if (c != 1) fail(Errc::internal, "solution count is not a p-power");
        // Cross-check: each per-degree count must match the linear-algebra
        // kernel dimension for the same extension.
        if (dim != kernel_dimension_over(inst, e))
            fail(Errc::internal, "enumeration disagrees with restriction-of-scalars kernel");
        best = std::max(best, dim);
    }
    // Enumeration alone cannot certify stabilization: the Galois action on the
    // solution space may have order beyond max_ext, hiding solutions from every
    // small extension. Certify against the kernel dimension at an extension
    // degree divisible by every possible order of that action.
    const long long certified = kernel_dimension_over(inst, certificate_extension(base.p, n));
    if (best != certified)
        fail(Errc::not_stabilized, "solution dimension still growing at max_ext");
    return best;
}

FCrystal corollary3_crystal(const ASInstance& inst, int m) {
    check_instance(inst);
    const int n = inst.n();
    if (m <= n) fail(Errc::insufficient_precision, "corollary3_crystal needs m > n");
    const auto& base = inst.A.params();
    const FieldParams& ring = field_params(base.p, base.d, m);

    GrMat mat(ring, 2 * n, 2 * n);
    const GrElt p_elt = GrElt::from_int(ring, base.p);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) mat.at(i, j) = teichmuller(inst.A.at(i, j), m);
        // g = [[A,I],[I,0]] lifted; right-hand block columns pick up diag(p I).
        mat.at(i, n + i) = p_elt;
        mat.at(n + i, i) = GrElt::one(ring);
    }
    return FCrystal(1, std::move(mat));
}

FamilyCrystal corollary3_family(const FamilyCrystal& fam_of_A, int m) {
    const auto& base = fam_of_A.params();
    if (base.m != 1) fail(Errc::param_mismatch, "A-family must be at precision m = 1");
    const int n = fam_of_A.rank();
    if (m <= n) fail(Errc::insufficient_precision, "corollary3_family needs m > n");
    const FieldParams& ring = field_params(base.p, base.d, m);
    const int k = fam_of_A.nvars();

    auto constant_entry = [&](long long v) {
        PolyEntry e;
        if (v != 0) e.push_back(Monomial{std::vector<int>(static_cast<size_t>(k), 0), GrElt::from_int(ring, v)});
        return e;
    };

    std::vector<PolyEntry> entries(static_cast<size_t>(4) * n * n);
    auto put = [&](int i, int j, PolyEntry e) { entries[static_cast<size_t>(i) * 2 * n + j] = std::move(e); };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            PolyEntry lifted;
            for (const auto& mono : fam_of_A.entry(i, j))
                lifted.push_back(Monomial{mono.exponents, teichmuller(mono.coeff, m)});
            put(i, j, std::move(lifted));
        }
        put(i, n + i, constant_entry(base.p));
        put(n + i, i, constant_entry(1));
    }
    return FamilyCrystal(ring, 1, 2 * n, fam_of_A.vars(), std::move(entries));
}

StratumReport as_stratify(const FamilyCrystal& fam_of_A, int max_degree) {
    if (fam_of_A.params().m != 1) fail(Errc::param_mismatch, "A-family must be at precision m = 1");
    auto points = enumerate_closed_points(fam_of_A, max_degree);
    StratumReport report;
    report.records.reserve(points.size());
    std::map<long long, std::vector<size_t>> by_dim;
    for (size_t i = 0; i < points.size(); ++i) {
        PointRecord rec;
        rec.point = points[i];
        try {
            ASInstance inst{evaluate_matrix_at(fam_of_A, points[i])};
            rec.prank = as_dimension(inst);
            rec.ok = true;
        } catch (const Error& e) {
            rec.error = e.code();
            rec.error_detail = e.what();
        }
        if (rec.ok) by_dim[rec.prank].push_back(i);
        report.records.push_back(std::move(rec));
    }
    for (auto& [t, v] : by_dim) report.prank_strata.emplace_back(t, std::move(v));
    return report;
}

}  // namespace crystalline
