#include "crystalline/wittring.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "crystalline/caps.hpp"

namespace crystalline {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::ok: return "Ok";
        case Errc::param_mismatch: return "ParamMismatch";
        case Errc::non_unit: return "NonUnit";
        case Errc::precision_increase: return "PrecisionIncrease";
        case Errc::precision_overflow: return "PrecisionOverflow";
        case Errc::not_a_crystal: return "NotACrystal";
        case Errc::invalid_slope: return "InvalidSlope";
        case Errc::index_out_of_range: return "IndexOutOfRange";
        case Errc::not_a_subfield: return "NotASubfield";
        case Errc::insufficient_precision: return "InsufficientPrecision";
        case Errc::rank_mismatch: return "RankMismatch";
        case Errc::cap_exceeded: return "CapExceeded";
        case Errc::not_stabilized: return "NotStabilized";
        case Errc::parse_error: return "ParseError";
        case Errc::internal: return "InternalError";
    }
    return "Unknown";
}

namespace {

using i64 = long long;
using u128 = unsigned __int128;

i64 mulmod(i64 a, i64 b, i64 q) { return static_cast<i64>((u128)a * (u128)b % (u128)q); }
i64 addmod(i64 a, i64 b, i64 q) { i64 s = a + b; return s >= q ? s - q : s; }
i64 submod(i64 a, i64 b, i64 q) { i64 s = a - b; return s < 0 ? s + q : s; }

i64 powmod(i64 a, i64 e, i64 q) {
    i64 r = 1 % q;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, q);
        a = mulmod(a, a, q);
        e >>= 1;
    }
    return r;
}

// ---- dense polynomial arithmetic over Z/q, coefficients low-first ----

using Poly = std::vector<i64>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly pmul(const Poly& a, const Poly& b, i64 q) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], q), q);
    trim(r);
    return r;
}

// Remainder mod a monic polynomial (monic over Z/q, leading coefficient 1).
Poly pmod(Poly a, const Poly& monic, i64 q) {
    size_t d = monic.size() - 1;
    trim(a);
    while (a.size() > d) {
        i64 lead = a.back();
        size_t shift = a.size() - 1 - d;
        if (lead != 0)
            for (size_t i = 0; i < d; ++i)
                a[shift + i] = submod(a[shift + i], mulmod(lead, monic[i], q), q);
        a.pop_back();
        trim(a);
        if (a.size() <= d) break;
    }
    return a;
}

Poly ppowmod(Poly base, i64 e, const Poly& monic, i64 q) {
    Poly r{1};
    base = pmod(std::move(base), monic, q);
    while (e > 0) {
        if (e & 1) r = pmod(pmul(r, base, q), monic, q);
        base = pmod(pmul(base, base, q), monic, q);
        e >>= 1;
    }
    return r;
}

Poly pgcd(Poly a, Poly b, i64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic
        i64 inv = powmod(b.back(), p - 2, p);
        for (auto& c : b) c = mulmod(c, inv, p);
        a = pmod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(const Poly& mod_coeffs, int d, i64 p) {
    // mod_coeffs are c_0..c_{d-1} of x^d + ...; build the monic vector.
    Poly f(mod_coeffs);
    f.push_back(1);
    // x^{p^d} == x mod f
    Poly x{0, 1};
    Poly xp = x;
    for (int i = 0; i < d; ++i) xp = ppowmod(xp, p, f, p);
    Poly diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = submod(diff[1], 1, p);
    diff = pmod(std::move(diff), f, p);
    if (!diff.empty()) return false;
    // gcd(x^{p^{d/l}} - x, f) = 1 for each prime l | d
    for (int l = 2; l <= d; ++l) {
        if (d % l != 0) continue;
        bool prime = true;
        for (int t = 2; t * t <= l; ++t)
            if (l % t == 0) prime = false;
        if (!prime) continue;
        Poly xe = x;
        for (int i = 0; i < d / l; ++i) xe = ppowmod(xe, p, f, p);
        if (xe.size() < 2) xe.resize(2, 0);
        xe[1] = submod(xe[1], 1, p);
        trim(xe);
        Poly g = pgcd(f, xe, p);
        if (g.size() > 1) return false;
    }
    return true;
}

// Lexicographically least monic irreducible of degree d over F_p, ordered by
// the coefficient tuple (c_{d-1}, ..., c_0).
Poly least_irreducible(i64 p, int d) {
    i64 total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (i64 n = 0; n < total; ++n) {
        // decode n with c[d-1] as the most significant digit
        Poly c(d, 0);
        i64 t = n;
        for (int k = 0; k < d; ++k) {
            c[k] = t % p;
            t /= p;
        }
        if (is_irreducible(c, d, p)) return c;
    }
    fail(Errc::internal, "no irreducible polynomial found");
}

struct RingKey {
    i64 p;
    int d;
    int m;
    auto operator<=>(const RingKey&) const = default;
};

std::mutex g_registry_mutex;
std::map<RingKey, FieldParams*>& registry() {
    static std::map<RingKey, FieldParams*> r;
    return r;
}

i64 checked_pow(i64 p, int m) {
    i64 pm = 1;
    for (int i = 0; i < m; ++i) {
        if (pm > caps().max_pm / p)
            fail(Errc::precision_overflow, "p^m exceeds the configured cap");
        pm *= p;
    }
    return pm;
}

// Arithmetic in Z/q[u]/(monic of degree d), used both while building the
// Teichmuller lift and for GrElt products afterwards.
std::vector<i64> ring_mul(const std::vector<i64>& a, const std::vector<i64>& b,
                          const Poly& monic_low, int d, i64 q) {
    Poly conv(2 * d - 1, 0);
    const int na = std::min<int>(d, static_cast<int>(a.size()));
    const int nb = std::min<int>(d, static_cast<int>(b.size()));
    for (int i = 0; i < na; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < nb; ++j)
            conv[i + j] = addmod(conv[i + j], mulmod(a[i], b[j], q), q);
    }
    Poly monic = monic_low;
    monic.push_back(1);
    Poly r = pmod(std::move(conv), monic, q);
    r.resize(d, 0);
    return r;
}

std::vector<i64> ring_pow(std::vector<i64> base, i64 e, const Poly& monic_low, int d, i64 q) {
    std::vector<i64> r(d, 0);
    r[0] = 1 % q;
    while (e > 0) {
        if (e & 1) r = ring_mul(r, base, monic_low, d, q);
        base = ring_mul(base, base, monic_low, d, q);
        e >>= 1;
    }
    return r;
}

FieldParams* build_params(i64 p, int d, int m) {
    if (p < 2 || d < 1 || m < 1) fail(Errc::param_mismatch, "need p >= 2, d >= 1, m >= 1");
    for (i64 t = 2; t * t <= p; ++t)
        if (p % t == 0) fail(Errc::param_mismatch, "p must be prime");
    auto fp = new FieldParams;
    fp->p = p;
    fp->d = d;
    fp->m = m;
    fp->pm = checked_pow(p, m);
    fp->modulus = least_irreducible(p, d);

    i64 q = fp->pm;
    i64 pd = 1;
    for (int i = 0; i < d; ++i) {
        if (pd > (1LL << 60) / p) fail(Errc::cap_exceeded, "p^d too large");
        pd *= p;
    }

    if (d == 1) {
        fp->lifted = fp->modulus;  // x itself; u plays no role
    } else {
        // Work in Z/q[u]/(g) with g the naive lift; xi = lim u^{p^{d k}} is the
        // Teichmuller element over u, and the lifted modulus is prod (X - xi^{p^i}).
        Poly g = fp->modulus;
        std::vector<i64> xi(d, 0);
        xi[1] = 1;
        for (int it = 0; it < m + 2; ++it) xi = ring_pow(xi, pd, g, d, q);
        // conjugates xi^{p^i}
        std::vector<std::vector<i64>> conj(d);
        conj[0] = xi;
        for (int i = 1; i < d; ++i) conj[i] = ring_pow(conj[i - 1], p, g, d, q);
        // expand prod (X - conj[i]); coefficients live in Z/q[u]/(g)
        std::vector<std::vector<i64>> coeffs(1, std::vector<i64>(d, 0));
        coeffs[0][0] = 1;  // polynomial "1" in X
        for (int i = 0; i < d; ++i) {
            std::vector<std::vector<i64>> next(coeffs.size() + 1, std::vector<i64>(d, 0));
            for (size_t k = 0; k < coeffs.size(); ++k) {
                // X * coeffs[k]
                for (int j = 0; j < d; ++j) next[k + 1][j] = addmod(next[k + 1][j], coeffs[k][j], q);
                // - conj[i] * coeffs[k]
                auto prod = ring_mul(conj[i], coeffs[k], g, d, q);
                for (int j = 0; j < d; ++j) next[k][j] = submod(next[k][j], prod[j], q);
            }
            coeffs = std::move(next);
        }
        // coefficients must be constants (fixed by Frobenius)
        fp->lifted.assign(d, 0);
        for (int k = 0; k < d; ++k) {
            for (int j = 1; j < d; ++j)
                if (coeffs[k][j] != 0) fail(Errc::internal, "Teichmuller lift is not defined over Z/p^m");
            fp->lifted[k] = coeffs[k][0];
        }
        if (coeffs[d][0] != 1) fail(Errc::internal, "lifted modulus is not monic");
        for (int k = 0; k < d; ++k)
            if (fp->lifted[k] % p != fp->modulus[k])
                fail(Errc::internal, "lifted modulus does not reduce to the modulus");
    }

    // reduction table u^{d+i} mod lifted
    fp->upow.assign(std::max(0, d - 1), std::vector<i64>(d, 0));
    if (d > 1) {
        std::vector<i64> cur(d, 0);  // u^d = -lifted
        for (int j = 0; j < d; ++j) cur[j] = submod(0, fp->lifted[j], q);
        fp->upow[0] = cur;
        for (int i = 1; i < d - 1; ++i) {
            // multiply by u
            std::vector<i64> nxt(d, 0);
            i64 top = cur[d - 1];
            for (int j = d - 1; j >= 1; --j) nxt[j] = cur[j - 1];
            nxt[0] = 0;
            if (top != 0)
                for (int j = 0; j < d; ++j)
                    nxt[j] = addmod(nxt[j], mulmod(top, submod(0, fp->lifted[j], q), q), q);
            fp->upow[i] = nxt;
            cur = nxt;
        }
    }

    // Frobenius power matrices
    fp->frob.resize(d);
    std::vector<std::vector<i64>> ident(d, std::vector<i64>(d, 0));
    for (int i = 0; i < d; ++i) ident[i][i] = 1 % q;
    fp->frob[0] = ident;
    if (d > 1) {
        std::vector<i64> up = ring_pow({0, 1}, p, fp->lifted, d, q);  // u^p in the lifted ring
        // columns of frob[1] are (u^p)^j
        std::vector<std::vector<i64>> f1(d, std::vector<i64>(d, 0));
        std::vector<i64> pw(d, 0);
        pw[0] = 1;
        for (int j = 0; j < d; ++j) {
            for (int i = 0; i < d; ++i) f1[i][j] = pw[i];
            pw = ring_mul(pw, up, fp->lifted, d, q);
        }
        fp->frob[1] = f1;
        for (int k = 2; k < d; ++k) {
            std::vector<std::vector<i64>> fk(d, std::vector<i64>(d, 0));
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    i64 s = 0;
                    for (int t = 0; t < d; ++t)
                        s = addmod(s, mulmod(f1[i][t], fp->frob[k - 1][t][j], q), q);
                    fk[i][j] = s;
                }
            fp->frob[k] = fk;
        }
    }
    return fp;
}

}  // namespace

const FieldParams& field_params(long long p, int d, int m) {
    RingKey key{p, d, m};
    std::lock_guard<std::mutex> lock(g_registry_mutex);
    auto& reg = registry();
    auto it = reg.find(key);
    if (it != reg.end()) return *it->second;
    FieldParams* fp = build_params(p, d, m);
    reg.emplace(key, fp);
    return *fp;
}

GrElt::GrElt(const FieldParams& fp, std::vector<long long> coords) : fp_(&fp), c_(std::move(coords)) {
    if (static_cast<int>(c_.size()) != fp.d) fail(Errc::param_mismatch, "coordinate count != d");
    for (auto& c : c_) {
        c %= fp.pm;
        if (c < 0) c += fp.pm;
    }
}

GrElt GrElt::zero(const FieldParams& fp) { return GrElt(fp, std::vector<long long>(fp.d, 0)); }

GrElt GrElt::one(const FieldParams& fp) {
    std::vector<long long> c(fp.d, 0);
    c[0] = 1 % fp.pm;
    return GrElt(fp, std::move(c));
}

GrElt GrElt::from_int(const FieldParams& fp, long long v) {
    std::vector<long long> c(fp.d, 0);
    c[0] = v;
    return GrElt(fp, std::move(c));
}

bool GrElt::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](long long v) { return v == 0; });
}

static void check_same(const GrElt& a, const GrElt& b) {
    if (!a.params().same_ring(b.params()))
        fail(Errc::param_mismatch, "operands live in different Galois rings");
}

GrElt gr_add(const GrElt& a, const GrElt& b) {
    check_same(a, b);
    const auto& fp = a.params();
    std::vector<long long> c(fp.d);
    for (int i = 0; i < fp.d; ++i) c[i] = addmod(a.coords()[i], b.coords()[i], fp.pm);
    return GrElt(fp, std::move(c));
}

GrElt gr_sub(const GrElt& a, const GrElt& b) {
    check_same(a, b);
    const auto& fp = a.params();
    std::vector<long long> c(fp.d);
    for (int i = 0; i < fp.d; ++i) c[i] = submod(a.coords()[i], b.coords()[i], fp.pm);
    return GrElt(fp, std::move(c));
}

GrElt gr_neg(const GrElt& a) {
    const auto& fp = a.params();
    std::vector<long long> c(fp.d);
    for (int i = 0; i < fp.d; ++i) c[i] = submod(0, a.coords()[i], fp.pm);
    return GrElt(fp, std::move(c));
}

GrElt gr_mul(const GrElt& a, const GrElt& b) {
    check_same(a, b);
    const auto& fp = a.params();
    int d = fp.d;
    i64 q = fp.pm;
    if (d == 1) {
        std::vector<long long> c{mulmod(a.coords()[0], b.coords()[0], q)};
        return GrElt(fp, std::move(c));
    }
    std::vector<i64> conv(2 * d - 1, 0);
    for (int i = 0; i < d; ++i) {
        if (a.coords()[i] == 0) continue;
        for (int j = 0; j < d; ++j)
            conv[i + j] = addmod(conv[i + j], mulmod(a.coords()[i], b.coords()[j], q), q);
    }
    std::vector<long long> c(conv.begin(), conv.begin() + d);
    for (int k = d; k < 2 * d - 1; ++k) {
        if (conv[k] == 0) continue;
        const auto& red = fp.upow[k - d];
        for (int j = 0; j < d; ++j) c[j] = addmod(c[j], mulmod(conv[k], red[j], q), q);
    }
    return GrElt(fp, std::move(c));
}

GrElt gr_pow(const GrElt& a, long long e) {
    GrElt r = GrElt::one(a.params());
    GrElt base = a;
    while (e > 0) {
        if (e & 1) r = gr_mul(r, base);
        base = gr_mul(base, base);
        e >>= 1;
    }
    return r;
}

int valuation(const GrElt& a) {
    const auto& fp = a.params();
    int v = fp.m;
    for (long long c : a.coords()) {
        if (c == 0) continue;
        int vc = 0;
        while (c % fp.p == 0) {
            c /= fp.p;
            ++vc;
        }
        v = std::min(v, vc);
        if (v == 0) break;
    }
    return v;
}

GrElt divide_by_p(const GrElt& a, int v) {
    if (v == 0) return a;
    if (valuation(a) < v) fail(Errc::internal, "exact division by p^v requires valuation >= v");
    const auto& fp = a.params();
    i64 pv = 1;
    for (int i = 0; i < v; ++i) pv *= fp.p;
    std::vector<long long> c(fp.d);
    for (int i = 0; i < fp.d; ++i) c[i] = a.coords()[i] / pv;
    return GrElt(fp, std::move(c));
}

GrElt gr_inv(const GrElt& a) {
    if (valuation(a) >= 1) fail(Errc::non_unit, "element is not a unit (valuation >= 1)");
    const auto& fp = a.params();
    // invert the residue, then Hensel-lift: b <- b (2 - a b)
    i64 pd = 1;
    for (int i = 0; i < fp.d; ++i) pd *= fp.p;
    GrElt rinv = gr_pow(residue(a), pd - 2);  // residue field inverse
    std::vector<long long> lift(rinv.coords().begin(), rinv.coords().end());
    GrElt b(fp, std::move(lift));
    GrElt two = GrElt::from_int(fp, 2);
    for (int prec = 1; prec < fp.m; prec *= 2) b = gr_mul(b, gr_sub(two, gr_mul(a, b)));
    return b;
}

GrElt frobenius(const GrElt& a, long long k) {
    const auto& fp = a.params();
    int kk = static_cast<int>(((k % fp.d) + fp.d) % fp.d);
    if (kk == 0 || fp.d == 1) return a;
    const auto& mat = fp.frob[kk];
    std::vector<long long> c(fp.d, 0);
    for (int j = 0; j < fp.d; ++j) {
        if (a.coords()[j] == 0) continue;
        for (int i = 0; i < fp.d; ++i)
            c[i] = addmod(c[i], mulmod(mat[i][j], a.coords()[j], fp.pm), fp.pm);
    }
    return GrElt(fp, std::move(c));
}

FFElt residue(const GrElt& a) {
    const FieldParams& ff = field_params(a.params().p, a.params().d, 1);
    std::vector<long long> c(a.params().d);
    for (int i = 0; i < a.params().d; ++i) c[i] = a.coords()[i] % a.params().p;
    return GrElt(ff, std::move(c));
}

GrElt change_precision(const GrElt& a, int m_new) {
    const auto& fp = a.params();
    if (m_new > fp.m) fail(Errc::precision_increase, "cannot raise precision by truncation");
    if (m_new == fp.m) return a;
    const FieldParams& tgt = field_params(fp.p, fp.d, m_new);
    std::vector<long long> c(fp.d);
    for (int i = 0; i < fp.d; ++i) c[i] = a.coords()[i] % tgt.pm;
    return GrElt(tgt, std::move(c));
}

GrElt teichmuller(const FFElt& x, int m) {
    const auto& ff = x.params();
    if (ff.m != 1) fail(Errc::param_mismatch, "teichmuller expects a field element (m = 1)");
    const FieldParams& fp = field_params(ff.p, ff.d, m);
    GrElt a(fp, std::vector<long long>(x.coords().begin(), x.coords().end()));
    i64 pd = 1;
    for (int i = 0; i < fp.d; ++i) pd *= fp.p;
    for (int it = 0; it < m + 1; ++it) a = gr_pow(a, pd);
    return a;
}

namespace {

struct EmbKey {
    i64 p;
    int d;
    int big_d;
    int m;
    auto operator<=>(const EmbKey&) const = default;
};

// Cached powers of the image of u under GR(p^m,d) -> GR(p^m,D).
const std::vector<GrElt>& embedding_powers(i64 p, int d, int big_d, int m) {
    static std::mutex mx;
    static std::map<EmbKey, std::vector<GrElt>*> cache;
    EmbKey key{p, d, big_d, m};
    std::lock_guard<std::mutex> lock(mx);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    const FieldParams& small = field_params(p, d, 1);
    // All roots of the degree-d modulus lie in the sigma^d-fixed subfield,
    // which has only p^d elements; enumerate it through an F_p-basis (the
    // kernel of sigma^d - id) rather than walking all of F_{p^D}.
    const FieldParams& bigf = field_params(p, big_d, 1);
    const int D = big_d;
    std::vector<std::vector<i64>> M(static_cast<size_t>(D), std::vector<i64>(static_cast<size_t>(D), 0));
    for (int j = 0; j < D; ++j) {
        std::vector<i64> cj(static_cast<size_t>(D), 0);
        cj[static_cast<size_t>(j)] = 1;
        GrElt img = frobenius(GrElt(bigf, cj), d);
        for (int i = 0; i < D; ++i) M[static_cast<size_t>(i)][static_cast<size_t>(j)] = img.coords()[static_cast<size_t>(i)];
        auto& diag = M[static_cast<size_t>(j)][static_cast<size_t>(j)];
        diag = ((diag - 1) % p + p) % p;
    }
    std::vector<int> pivot_of_col(static_cast<size_t>(D), -1);
    int rk = 0;
    for (int col = 0; col < D && rk < D; ++col) {
        int pr = -1;
        for (int i = rk; i < D; ++i)
            if (M[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(M[static_cast<size_t>(rk)], M[static_cast<size_t>(pr)]);
        i64 inv = powmod(M[static_cast<size_t>(rk)][static_cast<size_t>(col)], p - 2, p);
        for (int j = col; j < D; ++j)
            M[static_cast<size_t>(rk)][static_cast<size_t>(j)] = mulmod(M[static_cast<size_t>(rk)][static_cast<size_t>(j)], inv, p);
        for (int i = 0; i < D; ++i) {
            if (i == rk) continue;
            i64 f = M[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int j = col; j < D; ++j)
                M[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    submod(M[static_cast<size_t>(i)][static_cast<size_t>(j)], mulmod(f, M[static_cast<size_t>(rk)][static_cast<size_t>(j)], p), p);
        }
        pivot_of_col[static_cast<size_t>(col)] = rk;
        ++rk;
    }
    std::vector<std::vector<i64>> basis;
    for (int col = 0; col < D; ++col) {
        if (pivot_of_col[static_cast<size_t>(col)] >= 0) continue;
        std::vector<i64> v(static_cast<size_t>(D), 0);
        v[static_cast<size_t>(col)] = 1;
        for (int c2 = 0; c2 < col; ++c2) {
            int piv = pivot_of_col[static_cast<size_t>(c2)];
            if (piv < 0) continue;
            v[static_cast<size_t>(c2)] = submod(0, M[static_cast<size_t>(piv)][static_cast<size_t>(col)], p);
        }
        basis.push_back(std::move(v));
    }
    if (static_cast<int>(basis.size()) != d) fail(Errc::internal, "sigma-fixed subfield has unexpected dimension");
    // lex-least root of the modulus within the subfield
    GrElt root = GrElt::zero(bigf);
    bool found = false;
    std::vector<i64> digits(static_cast<size_t>(d), 0);
    bool done = false;
    while (!done) {
        std::vector<i64> coords(static_cast<size_t>(D), 0);
        for (int b = 0; b < d; ++b) {
            if (digits[static_cast<size_t>(b)] == 0) continue;
            for (int i = 0; i < D; ++i)
                coords[static_cast<size_t>(i)] = (coords[static_cast<size_t>(i)] + digits[static_cast<size_t>(b)] * basis[static_cast<size_t>(b)][static_cast<size_t>(i)]) % p;
        }
        GrElt cand(bigf, coords);
        GrElt acc = GrElt::zero(bigf);
        GrElt pw = GrElt::one(bigf);
        for (int i = 0; i < d; ++i) {
            acc = gr_add(acc, gr_mul(GrElt::from_int(bigf, small.modulus[i]), pw));
            pw = gr_mul(pw, cand);
        }
        acc = gr_add(acc, pw);  // monic top term
        if (acc.is_zero()) {
            if (!found || cand.coords() < root.coords()) root = cand;
            found = true;
        }
        int pos = d - 1;
        while (pos >= 0) {
            if (++digits[static_cast<size_t>(pos)] < p) break;
            digits[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) done = true;
    }
    if (!found) fail(Errc::internal, "no root of the subfield modulus found");
    GrElt uhat = teichmuller(root, m);
    auto* pows = new std::vector<GrElt>;
    GrElt pw = GrElt::one(field_params(p, big_d, m));
    for (int i = 0; i < d; ++i) {
        pows->push_back(pw);
        pw = gr_mul(pw, uhat);
    }
    cache.emplace(key, pows);
    return *pows;
}

}  // namespace

GrElt embed(const GrElt& a, int big_d) {
    const auto& fp = a.params();
    if (big_d == fp.d) return a;
    if (big_d % fp.d != 0) fail(Errc::not_a_subfield, "target degree is not a multiple of d");
    const auto& pows = embedding_powers(fp.p, fp.d, big_d, fp.m);
    const FieldParams& tgt = field_params(fp.p, big_d, fp.m);
    GrElt acc = GrElt::zero(tgt);
    for (int i = 0; i < fp.d; ++i) {
        if (a.coords()[i] == 0) continue;
        acc = gr_add(acc, gr_mul(GrElt::from_int(tgt, a.coords()[i]), pows[i]));
    }
    return acc;
}

GrElt project_to_subring(const GrElt& a, int d_sub) {
    const auto& fp = a.params();
    if (d_sub == fp.d) return a;
    if (fp.d % d_sub != 0) fail(Errc::not_a_subfield, "d_sub does not divide d");
    const auto& pows = embedding_powers(fp.p, d_sub, fp.d, fp.m);
    // Solve sum_j x_j pows[j] = a over Z/p^m by elimination with unit pivots.
    int rows = fp.d, cols = d_sub;
    i64 q = fp.pm;
    std::vector<std::vector<i64>> A(rows, std::vector<i64>(cols + 1, 0));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) A[i][j] = pows[j].coords()[i];
        A[i][cols] = a.coords()[i];
    }
    std::vector<int> pivot_col(rows, -1);
    int rank = 0;
    for (int col = 0; col < cols; ++col) {
        int pr = -1;
        for (int i = rank; i < rows; ++i)
            if (A[i][col] % fp.p != 0) { pr = i; break; }
        if (pr < 0) fail(Errc::internal, "embedding matrix lost rank");
        std::swap(A[rank], A[pr]);
        i64 inv = 0;
        {  // invert a unit mod p^m via Hensel from the mod-p inverse
            i64 r0 = powmod(A[rank][col] % fp.p, fp.p - 2, fp.p);
            inv = r0;
            for (int prec = 1; prec < fp.m; prec *= 2)
                inv = mulmod(inv, submod(2 % q, mulmod(A[rank][col], inv, q), q), q);
        }
        for (int j = col; j <= cols; ++j) A[rank][j] = mulmod(A[rank][j], inv, q);
        for (int i = 0; i < rows; ++i) {
            if (i == rank || A[i][col] == 0) continue;
            i64 f = A[i][col];
            for (int j = col; j <= cols; ++j)
                A[i][j] = submod(A[i][j], mulmod(f, A[rank][j], q), q);
        }
        pivot_col[rank] = col;
        ++rank;
    }
    for (int i = rank; i < rows; ++i)
        if (A[i][cols] != 0) fail(Errc::internal, "element is not in the requested subring");
    std::vector<long long> x(cols, 0);
    for (int i = 0; i < rank; ++i) x[pivot_col[i]] = A[i][cols];
    return GrElt(field_params(fp.p, d_sub, fp.m), std::move(x));
}

std::vector<FFElt> field_elements(long long p, int d) {
    const FieldParams& ff = field_params(p, d, 1);
    i64 total = 1;
    for (int i = 0; i < d; ++i) {
        if (total > caps().max_enum / p) fail(Errc::cap_exceeded, "field too large to enumerate");
        total *= p;
    }
    std::vector<FFElt> out;
    out.reserve(static_cast<size_t>(total));
    for (i64 n = 0; n < total; ++n) {
        std::vector<long long> c(d, 0);
        i64 t = n;
        for (int k = d - 1; k >= 0; --k) {
            c[k] = t % p;
            t /= p;
        }
        out.emplace_back(ff, std::move(c));
    }
    return out;
}

}  // namespace crystalline
