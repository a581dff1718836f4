#include "crystalline/strata.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "crystalline/caps.hpp"

namespace crystalline {

namespace {

// Lexicographic order on coordinate tuples (each coordinate by its
// coefficient vector); fixes the orbit representative and the point order.
bool tuple_less(const std::vector<FFElt>& a, const std::vector<FFElt>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].coords() != b[i].coords()) return a[i].coords() < b[i].coords();
    }
    return false;
}

std::vector<FFElt> tuple_frobenius(const std::vector<FFElt>& t, long long k) {
    std::vector<FFElt> r;
    r.reserve(t.size());
    for (const auto& c : t) r.push_back(frobenius(c, k));
    return r;
}

}  // namespace

FamilyCrystal::FamilyCrystal(const FieldParams& fp, int twist, int rank,
                             std::vector<std::string> vars, std::vector<PolyEntry> entries)
    : fp_(&fp), twist_(twist), rank_(rank), vars_(std::move(vars)), entries_(std::move(entries)) {
    if (twist_ < 1) fail(Errc::param_mismatch, "twist must be >= 1");
    if (rank_ < 1 || rank_ > static_cast<int>(caps().max_rank))
        fail(Errc::cap_exceeded, "family rank out of range");
    if (vars_.empty()) fail(Errc::param_mismatch, "family needs at least one variable");
    if (entries_.size() != static_cast<size_t>(rank_) * rank_)
        fail(Errc::param_mismatch, "entry count does not match rank");
    for (const auto& e : entries_) {
        for (const auto& mono : e) {
            if (mono.exponents.size() != vars_.size())
                fail(Errc::param_mismatch, "monomial exponent arity mismatch");
            for (int ex : mono.exponents)
                if (ex < 0 || ex > 64) fail(Errc::cap_exceeded, "monomial degree out of range");
            if (!mono.coeff.params().same_ring(*fp_))
                fail(Errc::param_mismatch, "coefficient ring mismatch");
        }
    }
}

std::vector<ClosedPoint> enumerate_closed_points(const FamilyCrystal& fam, int max_degree) {
    if (max_degree < 1) fail(Errc::param_mismatch, "max_degree must be >= 1");
    const FieldParams& base = fam.params();
    const int k = fam.nvars();

    // Total rational points at the top degree bound the work.
    long double total = 1;
    for (int i = 0; i < max_degree * k * base.d; ++i) {
        total *= static_cast<long double>(base.p);
        if (total > static_cast<long double>(caps().max_points))
            fail(Errc::cap_exceeded, "closed-point enumeration exceeds the points cap");
    }

    std::vector<ClosedPoint> out;
    for (int e = 1; e <= max_degree; ++e) {
        const auto elems = field_elements(base.p, base.d * e);
        const size_t ne = elems.size();
        std::vector<size_t> idx(static_cast<size_t>(k), 0);
        std::vector<FFElt> tup(static_cast<size_t>(k), elems[0]);
        bool done = false;
        while (!done) {
            for (int i = 0; i < k; ++i) tup[static_cast<size_t>(i)] = elems[idx[static_cast<size_t>(i)]];
            // Minimal degree: smallest divisor e' of e with sigma^{d e'} fixing the tuple.
            int mindeg = e;
            for (int ep = 1; ep < e; ++ep) {
                if (e % ep != 0) continue;
                if (tuple_frobenius(tup, static_cast<long long>(base.d) * ep) == tup) {
                    mindeg = ep;
                    break;
                }
            }
            if (mindeg == e) {
                // Keep only the lexicographically least conjugate.
                bool least = true;
                auto conj = tup;
                for (int j = 1; j < e && least; ++j) {
                    conj = tuple_frobenius(conj, base.d);
                    if (tuple_less(conj, tup)) least = false;
                }
                if (least) out.push_back(ClosedPoint{e, tup});
            }
            // lexicographic odometer, last coordinate fastest
            int pos = k - 1;
            while (pos >= 0) {
                if (++idx[static_cast<size_t>(pos)] < ne) break;
                idx[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) done = true;
        }
    }
    return out;
}

GrMat evaluate_matrix_at(const FamilyCrystal& fam, const ClosedPoint& pt) {
    const FieldParams& base = fam.params();
    if (static_cast<int>(pt.coords.size()) != fam.nvars())
        fail(Errc::param_mismatch, "point arity does not match family");
    const int big_d = base.d * pt.ext_degree;
    for (const auto& c : pt.coords)
        if (c.params().p != base.p || c.params().d != big_d || c.params().m != 1)
            fail(Errc::param_mismatch, "point coordinates not in F_{q^e}");

    const FieldParams& ring = field_params(base.p, big_d, base.m);
    std::vector<GrElt> tlift;
    tlift.reserve(pt.coords.size());
    for (const auto& c : pt.coords) tlift.push_back(teichmuller(c, base.m));

    const int r = fam.rank();
    GrMat mat(ring, r, r);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            GrElt acc = GrElt::zero(ring);
            for (const auto& mono : fam.entry(i, j)) {
                GrElt term = embed(mono.coeff, big_d);
                for (size_t v = 0; v < tlift.size(); ++v)
                    if (mono.exponents[v] > 0) term = gr_mul(term, gr_pow(tlift[v], mono.exponents[v]));
                acc = gr_add(acc, term);
            }
            mat.at(i, j) = acc;
        }
    }
    return mat;
}

FCrystal evaluate_at(const FamilyCrystal& fam, const ClosedPoint& pt) {
    return FCrystal(fam.twist(), evaluate_matrix_at(fam, pt));
}

namespace {

PointRecord evaluate_record(const FamilyCrystal& fam, const ClosedPoint& pt) {
    PointRecord rec;
    rec.point = pt;
    try {
        FCrystal c = evaluate_at(fam, pt);
        rec.newton = newton_polygon(c);
        rec.prank = p_rank(c);
        rec.ok = true;
    } catch (const Error& e) {
        rec.ok = false;
        rec.error = e.code();
        rec.error_detail = e.what();
    }
    return rec;
}

std::vector<Rat> polygon_key(const Polygon& p) { return p.slopes(); }

}  // namespace

StratumReport scan(const FamilyCrystal& fam, int max_degree, int jobs) {
    auto points = enumerate_closed_points(fam, max_degree);
    StratumReport report;
    report.records.resize(points.size());

    if (jobs < 1) jobs = 1;
    jobs = std::min<int>(jobs, static_cast<int>(points.size()));
    if (jobs <= 1) {
        for (size_t i = 0; i < points.size(); ++i)
            report.records[i] = evaluate_record(fam, points[i]);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(jobs));
        for (int t = 0; t < jobs; ++t) {
            pool.emplace_back([&] {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= points.size()) break;
                    report.records[i] = evaluate_record(fam, points[i]);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    bool any_ok = false;
    for (const auto& r : report.records) any_ok = any_ok || r.ok;
    if (!any_ok) {
        if (report.records.empty()) fail(Errc::internal, "no closed points enumerated");
        fail(report.records[0].error, "every sampled point failed: " + report.records[0].error_detail);
    }

    std::map<std::vector<Rat>, std::pair<Polygon, std::vector<size_t>>> by_np;
    std::map<BreakPoint, std::vector<size_t>> by_bp;
    std::map<long long, std::vector<size_t>> by_pr;
    for (size_t i = 0; i < report.records.size(); ++i) {
        const auto& r = report.records[i];
        if (!r.ok) continue;
        auto& slot = by_np[polygon_key(r.newton)];
        slot.first = r.newton;
        slot.second.push_back(i);
        for (const auto& bp : break_points(r.newton)) by_bp[bp].push_back(i);
        by_pr[r.prank].push_back(i);
    }
    for (auto& [key, slot] : by_np) report.newton_strata.emplace_back(slot.first, std::move(slot.second));
    for (auto& [bp, v] : by_bp) report.break_strata.emplace_back(bp, std::move(v));
    for (auto& [t, v] : by_pr) report.prank_strata.emplace_back(t, std::move(v));
    return report;
}

bool check_specialization(const StratumReport& report, const Polygon& nu,
                          std::vector<size_t>* members) {
    auto above = [&](const Polygon& np, const Polygon& target) {
        try {
            return lies_above(np, target);
        } catch (const Error&) {
            return false;
        }
    };
    std::vector<size_t> mem;
    for (size_t i = 0; i < report.records.size(); ++i)
        if (report.records[i].ok && above(report.records[i].newton, nu)) mem.push_back(i);

    // Transitivity on the sample: lies above a member's polygon => member.
    bool consistent = true;
    for (size_t i = 0; i < report.records.size() && consistent; ++i) {
        const auto& ri = report.records[i];
        if (!ri.ok) continue;
        for (size_t j : mem) {
            if (above(ri.newton, report.records[j].newton) &&
                std::find(mem.begin(), mem.end(), i) == mem.end()) {
                consistent = false;
                break;
            }
        }
    }
    if (members) *members = std::move(mem);
    return consistent;
}

namespace {

// nu1 / nu2 of Step 1, anchored at this point's endpoint height q.
// Returns false when the prescribed slope list is not ascending (the
// figure's premise fails at this point, so the check is vacuous).
bool step1_polygons(long long b, long long r, long long q, Polygon* nu1, Polygon* nu2) {
    if (r < 2 || b < 0) return false;
    std::vector<Rat> s1, s2;
    s1.push_back(Rat(b));
    for (long long i = 0; i < r - 2; ++i) s1.push_back(Rat(b + 1));
    long long last1 = q - b - (r - 2) * (b + 1);
    s1.push_back(Rat(last1));
    for (long long i = 0; i < r - 1; ++i) s2.push_back(Rat(b + 1));
    long long last2 = q - (r - 1) * (b + 1);
    s2.push_back(Rat(last2));
    if (last1 < (r >= 3 ? b + 1 : b) || last2 < b + 1) return false;
    *nu1 = Polygon::from_slopes(PolyKind::newton, std::move(s1));
    *nu2 = Polygon::from_slopes(PolyKind::newton, std::move(s2));
    return true;
}

}  // namespace

bool verify_step1_identities(const FamilyCrystal& fam, long long a, long long b,
                             int max_degree, std::string* detail) {
    auto fill = [&](const std::string& msg) {
        if (detail) *detail = msg;
        return false;
    };
    if (a < 0 || b < 0 || a > fam.rank()) return true;  // S_{P0} is empty off the lattice

    auto points = enumerate_closed_points(fam, max_degree);
    for (size_t pi = 0; pi < points.size(); ++pi) {
        FCrystal c = evaluate_at(fam, points[pi]);
        Polygon np = newton_polygon(c);
        FCrystal wedge = exterior_power(c, static_cast<int>(a));
        Polygon npw = newton_polygon(wedge);

        bool in_np = has_break_point(np, BreakPoint{a, b});
        bool in_w = has_break_point(npw, BreakPoint{1, b});
        if (in_np != in_w)
            return fill("identity (1) fails at point index " + std::to_string(pi));

        // Identity (2) on the wedge (a = 1 normal form), integer slopes only.
        bool integral = true;
        for (const auto& s : npw.slopes()) integral = integral && s.is_integer();
        if (!integral) continue;
        const long long rw = npw.rank();
        const Rat qr = npw.value_at(rw);
        Polygon nu1, nu2;
        if (!step1_polygons(b, rw, qr.num, &nu1, &nu2)) continue;
        if (!lies_above(npw, nu1)) continue;
        bool not_above2 = !lies_above(npw, nu2);
        if (in_w != not_above2)
            return fill("identity (2) fails at point index " + std::to_string(pi));
    }
    return true;
}

}  // namespace crystalline
