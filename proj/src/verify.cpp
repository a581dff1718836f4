#include "crystalline/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "crystalline/artinschreier.hpp"
#include "crystalline/caps.hpp"
#include "crystalline/fcrystal.hpp"
#include "crystalline/slopes.hpp"
#include "crystalline/strata.hpp"

namespace crystalline {

namespace {

// Portable bounded draws: plain modulo on mt19937_64 output, so every
// implementation of the suites sees the same stream.
struct Rng {
    std::mt19937_64 g;
    explicit Rng(unsigned long long seed) : g(seed) {}
    unsigned long long raw() { return g(); }
    long long below(long long n) { return static_cast<long long>(g() % static_cast<unsigned long long>(n)); }
    long long pick(std::initializer_list<long long> opts) {
        auto it = opts.begin();
        std::advance(it, below(static_cast<long long>(opts.size())));
        return *it;
    }
};

struct Failure {
    std::string msg;
};

#define REQUIRE_TRUE(cond, msg)                         \
    do {                                                \
        if (!(cond)) throw Failure{msg};                \
    } while (0)

GrElt random_elt(Rng& rng, const FieldParams& fp) {
    std::vector<long long> c(static_cast<size_t>(fp.d));
    for (auto& x : c) x = rng.below(fp.pm);
    return GrElt(fp, std::move(c));
}

GrMat random_mat(Rng& rng, const FieldParams& fp, int r) {
    GrMat m(fp, r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) m.at(i, j) = random_elt(rng, fp);
    return m;
}

GrMat random_unit_mat(Rng& rng, const FieldParams& fp, int r) {
    for (;;) {
        GrMat u = random_mat(rng, fp, r);
        if (is_unit_matrix(u)) return u;
    }
}

// U^{-1} M sigma^n(U): the matrix of the same semilinear map in a new basis.
GrMat conjugate(const GrMat& m, const GrMat& u, int twist) {
    return mat_mul(mat_mul(mat_inverse(u), m), frobenius_entrywise(u, twist));
}

// Reinterpret the canonical coordinates at a higher precision.
FCrystal lift_crystal(const FCrystal& c, int m_new) {
    const auto& fp = c.params();
    const FieldParams& up = field_params(fp.p, fp.d, m_new);
    GrMat m(up, c.rank(), c.rank());
    for (int i = 0; i < c.rank(); ++i)
        for (int j = 0; j < c.rank(); ++j) m.at(i, j) = GrElt(up, c.matrix().at(i, j).coords());
    return FCrystal(c.twist(), std::move(m));
}

// --- suite corpora -------------------------------------------------------

// Criterion-3 generator: random valid crystals whose Newton polygon is
// certifiable at their own precision (regenerate otherwise).
std::vector<FCrystal> mazur_corpus(unsigned long long seed, int count) {
    Rng rng(seed * 2 + 1);
    std::vector<FCrystal> out;
    out.reserve(static_cast<size_t>(count));
    while (static_cast<int>(out.size()) < count) {
        long long p = rng.pick({2, 3, 5});
        int d = static_cast<int>(rng.pick({1, 2}));
        int r = 1 + static_cast<int>(rng.below(4));
        int m = 5 + static_cast<int>(rng.below(8));  // 5..12
        int n = 1 + static_cast<int>(rng.below(2));
        const FieldParams& fp = field_params(p, d, m);
        try {
            FCrystal c(n, random_mat(rng, fp, r));
            newton_compute(c);
            out.push_back(std::move(c));
        } catch (const Error&) {
            continue;  // invalid or uncertifiable draw; take the next one
        }
    }
    return out;
}

struct OracleCrystal {
    FCrystal crystal;
    std::vector<Rat> slopes;  // construction multiset, ascending
};

// Criterion-4 generator: change of basis of a direct sum of E(a_i/b_i),
// optionally pushed to F_{p^2} first.
std::vector<OracleCrystal> oracle_corpus(unsigned long long seed, int count) {
    Rng rng(seed * 2 + 7);
    static const std::pair<long long, long long> menu[] = {
        {0, 1}, {1, 1}, {2, 1}, {3, 1}, {1, 2}, {3, 2}, {1, 3}, {2, 3}};
    std::vector<OracleCrystal> out;
    out.reserve(static_cast<size_t>(count));
    while (static_cast<int>(out.size()) < count) {
        long long p = rng.pick({2, 3, 5});
        int d = static_cast<int>(rng.pick({1, 2}));
        int r = 1 + static_cast<int>(rng.below(4));
        std::vector<std::pair<long long, long long>> blocks;
        int left = r;
        long long asum = 0;
        while (left > 0) {
            auto [a, b] = menu[rng.below(8)];
            if (b > left) continue;
            blocks.emplace_back(a, b);
            left -= static_cast<int>(b);
            asum += a;
        }
        int m = static_cast<int>(d * asum) + 4;
        FCrystal sum = standard_E(blocks[0].first, blocks[0].second, 1, p, 1, m);
        for (size_t i = 1; i < blocks.size(); ++i)
            sum = direct_sum(sum, standard_E(blocks[i].first, blocks[i].second, 1, p, 1, m));
        if (d == 2) sum = base_change(sum, 2);
        const FieldParams& fp = field_params(p, d, m);
        GrMat u = random_unit_mat(rng, fp, r);
        OracleCrystal oc{FCrystal(1, conjugate(sum.matrix(), u, 1)), {}};
        for (const auto& [a, b] : blocks)
            for (long long i = 0; i < b; ++i) oc.slopes.push_back(Rat(a, b));
        std::sort(oc.slopes.begin(), oc.slopes.end());
        out.push_back(std::move(oc));
    }
    return out;
}

// The worked family F(e_1) = t e_1 + p e_2, F(e_2) = p e_1 over F_p.
FamilyCrystal worked_family(long long p, int m) {
    const FieldParams& fp = field_params(p, 1, m);
    const GrElt pe = GrElt::from_int(fp, p);
    std::vector<PolyEntry> entries(4);
    entries[0] = {Monomial{{1}, GrElt::one(fp)}};  // t
    entries[1] = {Monomial{{0}, pe}};              // p
    entries[2] = {Monomial{{0}, pe}};              // p
    // entries[3] stays 0
    return FamilyCrystal(fp, 1, 2, {"t"}, std::move(entries));
}

PolyEntry const_entry(const GrElt& c) {
    if (c.is_zero()) return {};
    return {Monomial{std::vector<int>(1, 0), c}};
}

// Criterion-7 generator: integer-slope rank-2/3 families, entries conjugated
// by unimodular polynomial matrices I + gamma t^j E_{il}.
FamilyCrystal step1_family(Rng& rng) {
    long long p = rng.pick({2, 3});
    long long a = 1 + rng.below(2);
    long long b = (a % 2 == 0) ? 2 : 1 + 2 * rng.below(1);  // a + b even
    if ((a + b) % 2 != 0) b = a;                            // keep slopes integral at t = 0
    int rank = 2 + static_cast<int>(rng.below(2));
    // wedge-square reduction multiplies the per-point determinant valuation
    // (at most a + b + 2) by rank - 1, so leave room for it
    int m = (rank - 1) * (static_cast<int>(a + b) + 2) + 5;
    const FieldParams& fp = field_params(p, 1, m);
    const GrElt one = GrElt::one(fp);
    auto ppow = [&](long long e) { return gr_pow(GrElt::from_int(fp, p), e); };

    int k = 1 + static_cast<int>(rng.below(2));
    std::vector<PolyEntry> entries(static_cast<size_t>(rank) * rank);
    auto at = [&](int i, int j) -> PolyEntry& { return entries[static_cast<size_t>(i) * rank + j]; };
    at(0, 0) = {Monomial{{k}, one}};
    at(0, 1) = const_entry(ppow(a));
    at(1, 0) = const_entry(ppow(b));
    if (rank == 3) at(2, 2) = const_entry(ppow(1 + rng.below(2)));
    FamilyCrystal fam(fp, 1, rank, {"t"}, std::move(entries));

    // One elementary conjugation: U = I + gamma t^j E_{il}, i != l.
    int i = static_cast<int>(rng.below(rank));
    int l = static_cast<int>(rng.below(rank));
    if (i == l) l = (l + 1) % rank;
    int j = 1 + static_cast<int>(rng.below(2));
    GrElt gamma = teichmuller(GrElt(field_params(p, 1, 1), {1 + rng.below(p - 1 > 0 ? p - 1 : 1)}), m);

    // Conjugated entries: (U^{-1} M sigma(U))_{rc}; U^{-1} = I - gamma t^j E_{il},
    // sigma(U) = I + gamma t^{pj} E_{il}. Expand in the monomial algebra.
    auto add_mono = [&](PolyEntry& e, int exp, const GrElt& c) {
        if (c.is_zero()) return;
        for (auto& mo : e) {
            if (mo.exponents[0] == exp) {
                mo.coeff = gr_add(mo.coeff, c);
                return;
            }
        }
        e.push_back(Monomial{{exp}, c});
    };
    std::vector<PolyEntry> conj(static_cast<size_t>(rank) * rank);
    for (int rr = 0; rr < rank; ++rr) {
        for (int cc = 0; cc < rank; ++cc) {
            PolyEntry e;
            // M
            for (const auto& mo : fam.entry(rr, cc)) add_mono(e, mo.exponents[0], mo.coeff);
            // M sigma(U) extra column term: col cc gains M[:, i] * gamma t^{pj} when cc == l
            if (cc == l)
                for (const auto& mo : fam.entry(rr, i))
                    add_mono(e, mo.exponents[0] + static_cast<int>(p) * j, gr_mul(mo.coeff, gamma));
            // U^{-1} row term: row rr loses gamma t^j * (row l of the two above) when rr == i
            if (rr == i) {
                for (const auto& mo : fam.entry(l, cc))
                    add_mono(e, mo.exponents[0] + j, gr_neg(gr_mul(gamma, mo.coeff)));
                if (cc == l)
                    for (const auto& mo : fam.entry(l, i))
                        add_mono(e, mo.exponents[0] + j + static_cast<int>(p) * j,
                                 gr_neg(gr_mul(gamma, gr_mul(mo.coeff, gamma))));
            }
            std::erase_if(e, [](const Monomial& mo) { return mo.coeff.is_zero(); });
            conj[static_cast<size_t>(rr) * rank + cc] = std::move(e);
        }
    }
    return FamilyCrystal(fp, 1, rank, {"t"}, std::move(conj));
}

// --- individual suites ---------------------------------------------------

std::string suite_wittring(unsigned long long seed) {
    (void)seed;
    const std::tuple<long long, int, int> rings[] = {{2, 1, 3}, {2, 2, 2}, {3, 1, 2}};
    for (auto [p, d, m] : rings) {
        const FieldParams& fp = field_params(p, d, m);
        // enumerate the whole ring
        std::vector<GrElt> all;
        std::vector<long long> c(static_cast<size_t>(d), 0);
        for (;;) {
            all.emplace_back(fp, c);
            int pos = d - 1;
            while (pos >= 0 && ++c[static_cast<size_t>(pos)] == fp.pm) c[static_cast<size_t>(pos--)] = 0;
            if (pos < 0) break;
        }
        const GrElt zero = GrElt::zero(fp), one = GrElt::one(fp);
        for (const auto& x : all) {
            REQUIRE_TRUE(gr_add(x, zero) == x, "additive identity");
            REQUIRE_TRUE(gr_mul(x, one) == x, "multiplicative identity");
            REQUIRE_TRUE(gr_add(x, gr_neg(x)) == zero, "additive inverse");
            REQUIRE_TRUE(frobenius(x, d) == x, "sigma^d = id");
            if (valuation(x) == 0) {
                REQUIRE_TRUE(gr_mul(x, gr_inv(x)) == one, "unit inverse");
            }
            int v = valuation(x);
            if (v < m) REQUIRE_TRUE(!divide_by_p(x, v).is_zero() || v == m, "divide_by_p strips p^v");
        }
        for (const auto& x : all) {
            for (const auto& y : all) {
                REQUIRE_TRUE(gr_add(x, y) == gr_add(y, x), "commutative +");
                REQUIRE_TRUE(gr_mul(x, y) == gr_mul(y, x), "commutative *");
                REQUIRE_TRUE(frobenius(gr_mul(x, y), 1) == gr_mul(frobenius(x, 1), frobenius(y, 1)),
                             "frobenius multiplicative");
                REQUIRE_TRUE(frobenius(gr_add(x, y), 1) == gr_add(frobenius(x, 1), frobenius(y, 1)),
                             "frobenius additive");
                int vx = valuation(x), vy = valuation(y);
                REQUIRE_TRUE(valuation(gr_mul(x, y)) >= std::min(m, vx + vy), "valuation superadditive");
            }
        }
        for (const auto& x : all)
            for (const auto& y : all)
                for (const auto& z : all) {
                    REQUIRE_TRUE(gr_add(gr_add(x, y), z) == gr_add(x, gr_add(y, z)), "associative +");
                    REQUIRE_TRUE(gr_mul(gr_mul(x, y), z) == gr_mul(x, gr_mul(y, z)), "associative *");
                    REQUIRE_TRUE(gr_mul(x, gr_add(y, z)) == gr_add(gr_mul(x, y), gr_mul(x, z)),
                                 "distributive");
                }
        // Teichmuller: multiplicative section of the residue map
        for (const auto& u : field_elements(p, d)) {
            GrElt t = teichmuller(u, m);
            REQUIRE_TRUE(residue(t) == u, "teichmuller section");
            for (const auto& w : field_elements(p, d)) {
                REQUIRE_TRUE(gr_mul(teichmuller(u, m), teichmuller(w, m)) ==
                                 teichmuller(gr_mul(u, w), m),
                             "teichmuller multiplicative");
            }
        }
        // embed / project roundtrip into d * 2
        for (const auto& x : all) {
            GrElt big = embed(x, d * 2);
            REQUIRE_TRUE(frobenius(big, d) == big, "embedded element sigma^d-fixed");
            REQUIRE_TRUE(project_to_subring(big, d) == x, "embed/project roundtrip");
        }
    }
    // teichmuller(2) in W_2(F_3) is the canonical 8 mod 9 (2^(3^k) -> 8)
    const FieldParams& f31 = field_params(3, 1, 2);
    REQUIRE_TRUE(teichmuller(GrElt(field_params(3, 1, 1), {2}), 2) == GrElt(f31, {8}),
                 "teichmuller(2) = 8 mod 9");
    return "ring axioms exhaustive on (2,1,3), (2,2,2), (3,1,2)";
}

std::string suite_fcrystal(unsigned long long seed) {
    Rng rng(seed * 2 + 11);
    for (int it = 0; it < 40; ++it) {
        long long p = rng.pick({2, 3, 5});
        int d = static_cast<int>(rng.pick({1, 2}));
        int r = 1 + static_cast<int>(rng.below(3));
        int m = 4 + static_cast<int>(rng.below(5));
        int n = 1 + static_cast<int>(rng.below(2));
        const FieldParams& fp = field_params(p, d, m);
        GrMat mat = random_mat(rng, fp, r);
        FCrystal c = [&] {
            for (;;) {
                try {
                    FCrystal cc(n, mat);
                    newton_compute(cc);
                    return cc;
                } catch (const Error&) {
                    mat = random_mat(rng, fp, r);
                }
            }
        }();
        // semilinearity of apply
        std::vector<GrElt> x, y;
        for (int i = 0; i < r; ++i) {
            x.push_back(random_elt(rng, fp));
            y.push_back(random_elt(rng, fp));
        }
        auto fx = c.apply(x), fy = c.apply(y);
        std::vector<GrElt> xy;
        for (int i = 0; i < r; ++i) xy.push_back(gr_add(x[static_cast<size_t>(i)], y[static_cast<size_t>(i)]));
        auto fxy = c.apply(xy);
        for (int i = 0; i < r; ++i)
            REQUIRE_TRUE(fxy[static_cast<size_t>(i)] ==
                             gr_add(fx[static_cast<size_t>(i)], fy[static_cast<size_t>(i)]),
                         "apply additive");
        GrElt s = random_elt(rng, fp);
        std::vector<GrElt> sx;
        for (int i = 0; i < r; ++i) sx.push_back(gr_mul(s, x[static_cast<size_t>(i)]));
        auto fsx = c.apply(sx);
        GrElt sn = frobenius(s, n);
        for (int i = 0; i < r; ++i)
            REQUIRE_TRUE(fsx[static_cast<size_t>(i)] == gr_mul(sn, fx[static_cast<size_t>(i)]),
                         "apply sigma^n-semilinear");
        // basis invariance of both polygons
        GrMat u = random_unit_mat(rng, fp, r);
        FCrystal cc(n, conjugate(c.matrix(), u, n));
        REQUIRE_TRUE(newton_polygon(cc) == newton_polygon(c), "Newton basis invariance");
        REQUIRE_TRUE(hodge_polygon(cc).segments().size() == hodge_polygon(c).segments().size() &&
                         hodge_polygon(cc) == hodge_polygon(c),
                     "Hodge basis invariance");
        // base change invariance
        REQUIRE_TRUE(newton_polygon(base_change(c, d * 2)) == newton_polygon(c),
                     "Newton base-change invariance");
        // direct sum slope multiset = union
        FCrystal ds = direct_sum(c, c);
        auto s1 = newton_polygon(c).slopes();
        auto sds = newton_polygon(ds).slopes();
        std::vector<Rat> twice = s1;
        twice.insert(twice.end(), s1.begin(), s1.end());
        std::sort(twice.begin(), twice.end());
        REQUIRE_TRUE(sds == twice, "direct sum Newton union");
    }
    return "semilinearity, basis/base-change invariance, direct sums (40 draws)";
}

std::string suite_standard_e(unsigned long long seed) {
    (void)seed;
    for (long long b = 1; b <= 4; ++b) {
        for (long long a = 0; a <= 6; ++a) {
            if (std::gcd(a, b) != 1) continue;
            for (int d : {1, 2}) {
                int m = static_cast<int>(a * b) + 2;
                FCrystal e = standard_E(a, b, 1, 2, d, m);
                Polygon np = newton_polygon(e);
                REQUIRE_TRUE(np.segments().size() == 1 && np.segments()[0].slope == Rat(a, b) &&
                                 np.segments()[0].mult == b,
                             "E(" + std::to_string(a) + "/" + std::to_string(b) + ") over F_" +
                                 std::to_string(1 << d) + " has a single slope a/b of multiplicity b");
            }
        }
    }
    return "E(a/b) pure of slope a/b for all coprime (a,b), b <= 4, a <= 6, over F_2 and F_4";
}

std::string suite_mazur(unsigned long long seed) {
    auto corpus = mazur_corpus(seed, 200);
    for (const auto& c : corpus) {
        Polygon h = hodge_polygon(c);
        Polygon n = newton_polygon(c);
        REQUIRE_TRUE(lies_above(n, h), "Newton lies above Hodge");
        Rat hsum(0), nsum(0);
        for (const auto& s : h.slopes()) hsum = hsum + s;
        for (const auto& s : n.slopes()) nsum = nsum + s;
        REQUIRE_TRUE(hsum == nsum && hsum == Rat(c.det_valuation()), "slope sums = det valuation");
    }
    return "Newton above Hodge with equal endpoints on 200 seeded crystals";
}

std::string suite_oracle(unsigned long long seed) {
    auto corpus = oracle_corpus(seed, 100);
    for (const auto& oc : corpus) {
        auto got = newton_polygon(oc.crystal).slopes();
        REQUIRE_TRUE(got == oc.slopes, "Newton slopes equal the construction multiset");
    }
    return "Newton slopes equal construction multiset on 100 basis-changed E-sums";
}

std::string suite_iterate_exterior(unsigned long long seed) {
    auto corpus = oracle_corpus(seed + 1, 100);
    for (size_t idx = 0; idx < corpus.size(); ++idx) {
        const auto& oc = corpus[idx];
        int s = 1 + static_cast<int>(idx % 3);
        auto base = newton_polygon(oc.crystal).slopes();
        // iterate/wedge multiply the determinant valuation; lift first so the
        // derived crystal stays nondegenerate at its own precision
        const int dv = oc.crystal.det_valuation();
        const int d = oc.crystal.params().d;
        int m_max = 0;
        for (long long pm = 1; pm <= caps().max_pm / oc.crystal.params().p; ++m_max)
            pm *= oc.crystal.params().p;
        const int m_it = std::max(oc.crystal.precision(), d * s * dv + 2);
        if (m_it <= m_max) {
            auto its = newton_polygon(iterate(lift_crystal(oc.crystal, m_it), s)).slopes();
            std::vector<Rat> expect;
            for (const auto& sl : base) expect.push_back(Rat(s) * sl);
            std::sort(expect.begin(), expect.end());
            REQUIRE_TRUE(its == expect, "newton(iterate(C,s)) = s * newton(C)");
        }
        if (oc.crystal.rank() >= 2) {
            const int m_w = std::max(oc.crystal.precision(), d * (oc.crystal.rank() - 1) * dv + 2);
            if (m_w > m_max) continue;
            auto w = newton_polygon(exterior_power(lift_crystal(oc.crystal, m_w), 2)).slopes();
            std::vector<Rat> sums;
            for (size_t i = 0; i < base.size(); ++i)
                for (size_t j = i + 1; j < base.size(); ++j) sums.push_back(base[i] + base[j]);
            std::sort(sums.begin(), sums.end());
            REQUIRE_TRUE(w == sums, "slopes of wedge^2 = pairwise sums");
        }
    }
    return "iterate scaling (s <= 3) and wedge^2 pairwise sums on 100 crystals";
}

std::string suite_breakpoints(unsigned long long seed) {
    auto corpus = mazur_corpus(seed, 60);
    auto oc = oracle_corpus(seed, 40);
    auto check = [](const Polygon& np) {
        for (const auto& bp : break_points(np)) {
            Rat v = np.value_at(bp.x);
            REQUIRE_TRUE(v.is_integer() && v.num == bp.y, "break point on the polygon with integer y");
        }
    };
    for (const auto& c : corpus) check(newton_polygon(c));
    for (const auto& o : oc) check(newton_polygon(o.crystal));
    return "all Newton break points have integer coordinates";
}

std::string suite_worked_example(unsigned long long seed) {
    (void)seed;
    for (long long p : {2, 3, 5}) {
        FamilyCrystal fam = worked_family(p, 5);
        StratumReport rep = scan(fam, 3, 2);
        Polygon nu1 = Polygon::from_slopes(PolyKind::newton, {Rat(1), Rat(1)});
        Polygon nu2 = Polygon::from_slopes(PolyKind::newton, {Rat(0), Rat(2)});
        REQUIRE_TRUE(rep.newton_strata.size() == 2, "exactly two Newton strata");
        for (const auto& [poly, members] : rep.newton_strata) {
            if (poly == nu1) {
                REQUIRE_TRUE(members.size() == 1, "S_nu1 is a single point");
                const auto& pt = rep.records[members[0]].point;
                bool zero = pt.ext_degree == 1;
                for (const auto& cc : pt.coords) zero = zero && cc.is_zero();
                REQUIRE_TRUE(zero, "S_nu1 = {t = 0}");
            } else {
                REQUIRE_TRUE(poly == nu2, "other stratum is nu2");
                REQUIRE_TRUE(members.size() == rep.records.size() - 1, "S_nu2 = everything else");
                for (size_t i : members)
                    REQUIRE_TRUE(has_break_point(rep.records[i].newton, BreakPoint{1, 0}),
                                 "(1,0) break point on S_nu2");
            }
        }
        // p-rank strata: Y_0 = {0}, Y_1 = rest
        REQUIRE_TRUE(rep.prank_strata.size() == 2 && rep.prank_strata[0].first == 0 &&
                         rep.prank_strata[0].second.size() == 1 && rep.prank_strata[1].first == 1,
                     "Y_0 = {0}, Y_1 = complement");
        // check_specialization with nu1 picks out exactly {t=0}
        std::vector<size_t> members;
        REQUIRE_TRUE(check_specialization(rep, nu1, &members) && members.size() == 1,
                     "S_{>=nu1} = {t=0} and monotone");
    }
    return "two strata with S_nu1 = {t=0} for p in {2,3,5}, degree <= 3";
}

std::string suite_step1(unsigned long long seed) {
    std::string detail;
    for (long long p : {2, 3, 5}) {
        REQUIRE_TRUE(verify_step1_identities(worked_family(p, 5), 1, 0, 3, &detail),
                     "worked family P0=(1,0): " + detail);
        // off-lattice P0 gives the empty stratum, identities hold vacuously
        REQUIRE_TRUE(verify_step1_identities(worked_family(p, 5), -1, 2, 2, &detail), "off-lattice P0");
    }
    Rng rng(seed * 2 + 13);
    for (int it = 0; it < 25; ++it) {
        FamilyCrystal fam = step1_family(rng);
        for (auto [a, b] : {std::pair<long long, long long>{1, 0}, {1, 1}, {2, 2}}) {
            REQUIRE_TRUE(verify_step1_identities(fam, a, b, 2, &detail),
                         "seeded family " + std::to_string(it) + " P0=(" + std::to_string(a) + "," +
                             std::to_string(b) + "): " + detail);
        }
    }
    return "Step-1 identities on the worked family and 25 seeded integer-slope families";
}

std::string suite_corollary3(unsigned long long seed) {
    Rng rng(seed * 2 + 17);
    int compared = 0;
    const std::pair<long long, int> fields[] = {{2, 1}, {2, 2}, {3, 1}};
    for (int it = 0; it < 100; ++it) {
        auto [p, d] = fields[rng.below(3)];
        int n = 1 + static_cast<int>(rng.below(3));
        const FieldParams& ff = field_params(p, d, 1);
        ASInstance inst{random_mat(rng, ff, n)};
        long long dim = as_dimension(inst);
        FCrystal c3 = corollary3_crystal(inst, 2 * n + 2);
        REQUIRE_TRUE(p_rank(c3) == dim, "p_rank(corollary3) = as_dimension");
        if (n <= 2) {
            int emax = 0;
            for (int e = 1; e <= 6; ++e) {
                bool fits = true;
                long double sz = 1;
                for (int i = 0; i < d * e * n; ++i) {
                    sz *= static_cast<long double>(p);
                    if (sz > 4.0e6L) fits = false;
                }
                if (fits) emax = e;
            }
            try {
                long long bf = brute_force_as_dimension(inst, emax);
                REQUIRE_TRUE(bf == dim, "brute force agrees with as_dimension");
                ++compared;
            } catch (const Error& e) {
                // oracle may hit the enumeration cap before the counts repeat
                REQUIRE_TRUE(e.code() == Errc::not_stabilized, e.what());
            }
        }
    }
    REQUIRE_TRUE(compared >= 40, "enough brute-force comparisons stabilized");
    return "p_rank = as_dimension = brute force on 100 seeded instances";
}

std::string suite_prank(unsigned long long seed) {
    auto corpus = mazur_corpus(seed, 80);
    auto oc = oracle_corpus(seed, 40);
    std::vector<FCrystal> all;
    for (auto& c : corpus)
        if (c.twist() == 1) all.push_back(std::move(c));
    for (auto& o : oc) all.push_back(std::move(o.crystal));
    REQUIRE_TRUE(!all.empty(), "corpus nonempty");
    for (const auto& c : all) {
        long long pr = p_rank(c);
        REQUIRE_TRUE(pr == fixed_point_dimension(c), "p_rank = fixed point dimension (n = 1)");
        long long best = 0;
        for (const auto& bp : break_points(newton_polygon(c)))
            if (bp.y == 0) best = std::max(best, bp.x);
        REQUIRE_TRUE(pr == best, "p_rank = largest x with vertex (x, 0)");
    }
    return "p-rank equals fixed-space dimension and the (x,0)-vertex bound";
}

std::string suite_precision(unsigned long long seed) {
    auto corpus = mazur_corpus(seed, 60);
    auto oc = oracle_corpus(seed, 40);
    std::vector<FCrystal> all;
    for (auto& c : corpus) all.push_back(std::move(c));
    for (auto& o : oc) all.push_back(std::move(o.crystal));
    for (const auto& c : all) {
        // stay under the p^m cap when doubling
        int m_max = 0;
        for (long long pm = 1; pm <= caps().max_pm / c.params().p; ++m_max) pm *= c.params().p;
        const int target = std::min(2 * c.precision(), m_max);
        if (target <= c.precision()) continue;
        FCrystal up = lift_crystal(c, target);
        REQUIRE_TRUE(newton_polygon(up) == newton_polygon(c), "Newton stable under doubled precision");
        REQUIRE_TRUE(hodge_polygon(up) == hodge_polygon(c), "Hodge stable under doubled precision");
    }
    // undersized precision errs instead of answering: E(1/2) (and hence its
    // square) cannot even be written down at m = 1
    bool threw = false;
    try {
        standard_E(1, 2, 1, 2, 1, 1);
    } catch (const Error& e) {
        threw = e.code() == Errc::insufficient_precision;
    }
    REQUIRE_TRUE(threw, "E(1/2) at m = 1 raises InsufficientPrecision");
    return "polygons stable at doubled precision; undersized m raises InsufficientPrecision";
}

std::string suite_strata_invariants(unsigned long long seed) {
    (void)seed;
    FamilyCrystal fam = worked_family(3, 5);
    // necklace formula for k = 1 closed point counts
    auto pts = enumerate_closed_points(fam, 3);
    auto mu = [](int f) { return f == 1 ? 1 : (f == 2 || f == 3 ? -1 : (f == 4 ? 0 : (f == 6 ? 1 : 0))); };
    long long expect = 0;
    for (int e = 1; e <= 3; ++e) {
        long long s = 0;
        for (int f = 1; f <= e; ++f)
            if (e % f == 0) {
                long long qe = 1;
                for (int i = 0; i < e / f; ++i) qe *= 3;
                s += mu(f) * qe;
            }
        expect += s / e;
    }
    REQUIRE_TRUE(static_cast<long long>(pts.size()) == expect, "necklace count of closed points");

    StratumReport rep = scan(fam, 3, 2);
    // partition: each ok record in exactly one newton stratum and one Y_t
    std::vector<int> seen_np(rep.records.size(), 0), seen_pr(rep.records.size(), 0);
    for (const auto& [poly, mem] : rep.newton_strata)
        for (size_t i : mem) ++seen_np[i];
    for (const auto& [t, mem] : rep.prank_strata)
        for (size_t i : mem) ++seen_pr[i];
    for (size_t i = 0; i < rep.records.size(); ++i) {
        int want = rep.records[i].ok ? 1 : 0;
        REQUIRE_TRUE(seen_np[i] == want && seen_pr[i] == want, "strata partition the ok points");
    }
    // break-point strata consistent with per-point polygons
    for (const auto& [bp, mem] : rep.break_strata)
        for (size_t i : mem)
            REQUIRE_TRUE(has_break_point(rep.records[i].newton, bp), "break stratum membership");

    // Galois invariance: a conjugate representative gives the same polygon
    for (const auto& pt : pts) {
        if (pt.ext_degree < 2) continue;
        ClosedPoint conj = pt;
        for (auto& c : conj.coords) c = frobenius(c, fam.params().d);
        REQUIRE_TRUE(newton_polygon(evaluate_at(fam, pt)) == newton_polygon(evaluate_at(fam, conj)),
                     "conjugate points share the Newton polygon");
        break;
    }
    // constant family: one stratum
    {
        const FieldParams& fp = field_params(2, 1, 4);
        FCrystal e12 = standard_E(1, 2, 1, 2, 1, 4);
        std::vector<PolyEntry> entries(4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) entries[static_cast<size_t>(i) * 2 + j] = const_entry(e12.matrix().at(i, j));
        FamilyCrystal cf(fp, 1, 2, {"t"}, std::move(entries));
        StratumReport crep = scan(cf, 2, 1);
        REQUIRE_TRUE(crep.newton_strata.size() == 1, "constant family has one stratum");
        // the all-zero polygon is below everything
        Polygon z = Polygon::from_slopes(PolyKind::newton, {Rat(0), Rat(0)});
        std::vector<size_t> mem;
        REQUIRE_TRUE(check_specialization(crep, z, &mem) && mem.size() == crep.records.size(),
                     "S_{>=0} = all points");
    }
    // determinism incl. parallel merge
    {
        StratumReport a = scan(fam, 2, 1), b = scan(fam, 2, 4);
        REQUIRE_TRUE(a.records.size() == b.records.size(), "scan size deterministic");
        for (size_t i = 0; i < a.records.size(); ++i)
            REQUIRE_TRUE(a.records[i].ok == b.records[i].ok &&
                             (!a.records[i].ok || a.records[i].newton == b.records[i].newton),
                         "parallel scan merge is order-deterministic");
    }
    return "partition, Galois invariance, necklace counts, parallel determinism";
}

std::string suite_as_invariants(unsigned long long seed) {
    Rng rng(seed * 2 + 23);
    // identity and zero matrices
    for (auto [p, d] : {std::pair<long long, int>{2, 1}, {2, 2}, {3, 1}}) {
        const FieldParams& ff = field_params(p, d, 1);
        for (int n = 1; n <= 3; ++n) {
            ASInstance id{GrMat::identity(ff, n)};
            REQUIRE_TRUE(as_dimension(id) == n, "A = I gives dimension n");
            ASInstance z{GrMat(ff, n, n)};
            REQUIRE_TRUE(as_dimension(z) == 0, "A = 0 gives dimension 0");
            // invertible A => dimension n
            GrMat u = random_unit_mat(rng, ff, n);
            REQUIRE_TRUE(as_dimension(ASInstance{u}) == n, "invertible A gives dimension n");
        }
    }
    // F_p-linearity of the solution set on a small instance (q = 2, n = 2, e = 3)
    {
        const FieldParams& ff = field_params(2, 1, 1);
        ASInstance inst{random_mat(rng, ff, 2)};
        GrMat a6 = embed_entrywise(inst.A, 3);
        auto elems = field_elements(2, 3);
        std::vector<std::vector<FFElt>> sols;
        for (const auto& x0 : elems)
            for (const auto& x1 : elems) {
                std::vector<FFElt> x{x0, x1};
                bool ok = true;
                for (int i = 0; i < 2 && ok; ++i) {
                    GrElt acc = GrElt::zero(a6.params());
                    for (int j = 0; j < 2; ++j)
                        acc = gr_add(acc, gr_mul(a6.at(i, j), frobenius(x[static_cast<size_t>(j)], 1)));
                    ok = (acc == x[static_cast<size_t>(i)]);
                }
                if (ok) sols.push_back(std::move(x));
            }
        for (const auto& u : sols)
            for (const auto& v : sols) {
                std::vector<FFElt> w{gr_add(u[0], v[0]), gr_add(u[1], v[1])};
                bool found = false;
                for (const auto& s : sols) found = found || (s[0] == w[0] && s[1] == w[1]);
                REQUIRE_TRUE(found, "solution set closed under addition");
            }
    }
    // family A(t) = [t] over F_p: Y_0 = {0}, Y_1 = rest
    for (long long p : {2, 3}) {
        const FieldParams& ff = field_params(p, 1, 1);
        std::vector<PolyEntry> entries(1);
        entries[0] = {Monomial{{1}, GrElt::one(ff)}};
        FamilyCrystal fam(ff, 1, 1, {"t"}, std::move(entries));
        StratumReport rep = as_stratify(fam, 2);
        REQUIRE_TRUE(rep.prank_strata.size() == 2 && rep.prank_strata[0].first == 0 &&
                         rep.prank_strata[0].second.size() == 1 &&
                         rep.prank_strata[1].first == 1 &&
                         rep.prank_strata[1].second.size() == rep.records.size() - 1,
                     "Y_0 = {0}, Y_1 = rest for A(t) = [t]");
        // cross-check against the Corollary-3 family scan
        StratumReport c3 = scan(corollary3_family(fam, 4), 2, 1);
        REQUIRE_TRUE(c3.records.size() == rep.records.size(), "same sampled points");
        for (size_t i = 0; i < rep.records.size(); ++i)
            REQUIRE_TRUE(c3.records[i].ok && c3.records[i].prank == rep.records[i].prank,
                         "corollary3 family p-rank matches as_dimension pointwise");
    }
    // p-rank is lift independent: perturb one entry of g by p
    {
        const FieldParams& ff = field_params(2, 1, 1);
        ASInstance inst{random_mat(rng, ff, 2)};
        FCrystal c3 = corollary3_crystal(inst, 6);
        GrMat alt = c3.matrix();
        alt.at(0, 0) = gr_add(alt.at(0, 0), GrElt::from_int(alt.params(), 2));
        FCrystal c3b(1, std::move(alt));
        REQUIRE_TRUE(p_rank(c3) == p_rank(c3b), "p-rank independent of the lift of g");
    }
    return "dimension bounds, linearity, Y_t strata, corollary-3 cross-checks";
}

using SuiteFn = std::string (*)(unsigned long long);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg = {
        {"wittring", suite_wittring},
        {"fcrystal", suite_fcrystal},
        {"standard_e", suite_standard_e},
        {"mazur", suite_mazur},
        {"oracle", suite_oracle},
        {"iterate_exterior", suite_iterate_exterior},
        {"breakpoints", suite_breakpoints},
        {"worked_example", suite_worked_example},
        {"step1", suite_step1},
        {"corollary3", suite_corollary3},
        {"prank", suite_prank},
        {"precision", suite_precision},
        {"strata_invariants", suite_strata_invariants},
        {"as_invariants", suite_as_invariants},
    };
    return reg;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [n, f] : registry()) v.push_back(n);
        return v;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name, unsigned long long seed) {
    for (const auto& [n, fn] : registry()) {
        if (n != name) continue;
        SuiteResult r{name, false, ""};
        try {
            r.detail = fn(seed);
            r.passed = true;
        } catch (const Failure& f) {
            r.detail = f.msg;
        } catch (const Error& e) {
            r.detail = std::string("unexpected error: ") + e.what();
        }
        return r;
    }
    fail(Errc::index_out_of_range, "unknown suite: " + name);
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    unsigned long long seed) {
    std::vector<SuiteResult> out;
    out.reserve(names.size());
    for (const auto& n : names) out.push_back(run_suite(n, seed));
    return out;
}

}  // namespace crystalline
