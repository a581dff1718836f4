#include "crystalline/serialize.hpp"

#include <utility>

namespace crystalline {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { fail(Errc::parse_error, msg); }

long long get_int(const Json& j, const char* key, long long lo, long long hi) {
    if (!j.contains(key) || !j[key].is_number_integer())
        parse_fail(std::string("missing or non-integer field '") + key + "'");
    long long v = j[key].get<long long>();
    if (v < lo || v > hi)
        parse_fail(std::string("field '") + key + "' out of range");
    return v;
}

std::vector<long long> get_coords(const Json& j, const FieldParams& fp) {
    if (!j.is_array() || j.size() != static_cast<size_t>(fp.d))
        parse_fail("coords must be an array of length d");
    std::vector<long long> c;
    c.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer()) parse_fail("coords must be integers");
        long long x = v.get<long long>();
        if (x < 0 || x >= fp.pm) parse_fail("coordinate out of range [0, p^m)");
        c.push_back(x);
    }
    return c;
}

// Matrix entry: full element object, or bare coords array in the ring fp.
GrElt entry_from_json(const Json& j, const FieldParams& fp) {
    if (j.is_array()) return GrElt(fp, get_coords(j, fp));
    GrElt e = element_from_json(j, 0);
    if (!e.params().same_ring(fp)) parse_fail("matrix entry ring mismatch");
    return e;
}

}  // namespace

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        if (byte > text.size()) byte = text.size();
        size_t line = 1, col = 1;
        for (size_t i = 0; i < byte; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        parse_fail("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
    }
}

Json element_to_json(const GrElt& a) {
    const auto& fp = a.params();
    return Json{{"p", fp.p}, {"d", fp.d}, {"m", fp.m}, {"coords", a.coords()}};
}

GrElt element_from_json(const Json& j, int m_override) {
    if (!j.is_object()) parse_fail("element must be an object");
    long long p = get_int(j, "p", 2, 1LL << 30);
    int d = static_cast<int>(get_int(j, "d", 1, 64));
    int m = static_cast<int>(get_int(j, "m", 1, 64));
    if (m_override > 0) {
        if (m_override < m) parse_fail("precision override below the stored precision");
        m = m_override;
    }
    const FieldParams& fp = field_params(p, d, m);
    if (!j.contains("coords")) parse_fail("element missing 'coords'");
    return GrElt(fp, get_coords(j["coords"], fp));
}

Json crystal_to_json(const FCrystal& c) {
    const auto& fp = c.params();
    Json rows = Json::array();
    for (int i = 0; i < c.rank(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < c.rank(); ++j) row.push_back(element_to_json(c.matrix().at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"p", fp.p}, {"d", fp.d}, {"m", fp.m}, {"n", c.twist()},
                {"rank", c.rank()}, {"matrix", std::move(rows)}};
}

FCrystal crystal_from_json(const Json& j, int m_override) {
    if (!j.is_object()) parse_fail("crystal must be an object");
    long long p = get_int(j, "p", 2, 1LL << 30);
    int d = static_cast<int>(get_int(j, "d", 1, 64));
    int m = static_cast<int>(get_int(j, "m", 1, 64));
    int n = static_cast<int>(get_int(j, "n", 1, 1LL << 20));
    int rank = static_cast<int>(get_int(j, "rank", 1, 8));
    if (m_override > 0) {
        if (m_override < m) parse_fail("precision override below the stored precision");
        m = m_override;
    }
    const FieldParams& fp = field_params(p, d, m);
    if (!j.contains("matrix") || !j["matrix"].is_array() || j["matrix"].size() != static_cast<size_t>(rank))
        parse_fail("matrix must be a rank x rank array");
    GrMat mat(fp, rank, rank);
    for (int i = 0; i < rank; ++i) {
        const auto& row = j["matrix"][static_cast<size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<size_t>(rank))
            parse_fail("matrix row length mismatch");
        for (int c = 0; c < rank; ++c) mat.at(i, c) = entry_from_json(row[static_cast<size_t>(c)], fp);
    }
    return FCrystal(n, std::move(mat));
}

Json polygon_to_json(const Polygon& p) {
    Json segs = Json::array();
    for (const auto& s : p.segments())
        segs.push_back(Json::array({s.slope.num, s.slope.den, s.mult}));
    return Json{{"kind", p.kind() == PolyKind::hodge ? "hodge" : "newton"}, {"segments", std::move(segs)}};
}

Polygon polygon_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("segments"))
        parse_fail("polygon must have 'kind' and 'segments'");
    std::string kind = j["kind"].get<std::string>();
    if (kind != "hodge" && kind != "newton") parse_fail("polygon kind must be 'hodge' or 'newton'");
    std::vector<Rat> slopes;
    for (const auto& s : j["segments"]) {
        if (!s.is_array() || s.size() != 3) parse_fail("segment must be [num, den, mult]");
        long long num = s[0].get<long long>(), den = s[1].get<long long>(), mult = s[2].get<long long>();
        if (den <= 0 || mult <= 0) parse_fail("segment must have positive denominator and multiplicity");
        for (long long i = 0; i < mult; ++i) slopes.push_back(Rat(num, den));
    }
    return Polygon::from_slopes(kind == "hodge" ? PolyKind::hodge : PolyKind::newton, std::move(slopes));
}

Json break_points_to_json(const std::vector<BreakPoint>& bps) {
    Json out = Json::array();
    for (const auto& b : bps) out.push_back(Json::array({b.x, b.y}));
    return out;
}

Json family_to_json(const FamilyCrystal& fam) {
    const auto& fp = fam.params();
    Json rows = Json::array();
    for (int i = 0; i < fam.rank(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < fam.rank(); ++j) {
            Json entry = Json::array();
            for (const auto& mono : fam.entry(i, j))
                entry.push_back(Json{{"exponents", mono.exponents}, {"coeff", element_to_json(mono.coeff)}});
            row.push_back(std::move(entry));
        }
        rows.push_back(std::move(row));
    }
    return Json{{"p", fp.p}, {"d", fp.d}, {"m", fp.m}, {"n", fam.twist()},
                {"rank", fam.rank()}, {"vars", fam.vars()}, {"matrix", std::move(rows)}};
}

FamilyCrystal family_from_json(const Json& j, int m_override) {
    if (!j.is_object()) parse_fail("family must be an object");
    long long p = get_int(j, "p", 2, 1LL << 30);
    int d = static_cast<int>(get_int(j, "d", 1, 64));
    int m = static_cast<int>(get_int(j, "m", 1, 64));
    int n = static_cast<int>(get_int(j, "n", 1, 1LL << 20));
    int rank = static_cast<int>(get_int(j, "rank", 1, 8));
    if (m_override > 0) {
        if (m_override < m) parse_fail("precision override below the stored precision");
        m = m_override;
    }
    const FieldParams& fp = field_params(p, d, m);
    if (!j.contains("vars") || !j["vars"].is_array() || j["vars"].empty())
        parse_fail("family needs a nonempty 'vars' array");
    std::vector<std::string> vars;
    for (const auto& v : j["vars"]) vars.push_back(v.get<std::string>());
    const size_t k = vars.size();

    if (!j.contains("matrix") || !j["matrix"].is_array() || j["matrix"].size() != static_cast<size_t>(rank))
        parse_fail("matrix must be a rank x rank array");
    std::vector<PolyEntry> entries;
    entries.reserve(static_cast<size_t>(rank) * rank);
    for (const auto& row : j["matrix"]) {
        if (!row.is_array() || row.size() != static_cast<size_t>(rank))
            parse_fail("matrix row length mismatch");
        for (const auto& ej : row) {
            if (!ej.is_array()) parse_fail("entry must be a list of monomials");
            PolyEntry entry;
            for (const auto& mj : ej) {
                if (!mj.is_object() || !mj.contains("exponents") || !mj.contains("coeff"))
                    parse_fail("monomial must have 'exponents' and 'coeff'");
                Monomial mono;
                for (const auto& ex : mj["exponents"]) mono.exponents.push_back(ex.get<int>());
                if (mono.exponents.size() != k) parse_fail("monomial exponent arity mismatch");
                mono.coeff = entry_from_json(mj["coeff"], fp);
                entry.push_back(std::move(mono));
            }
            entries.push_back(std::move(entry));
        }
    }
    return FamilyCrystal(fp, n, rank, std::move(vars), std::move(entries));
}

Json as_to_json(const ASInstance& inst) {
    const auto& fp = inst.A.params();
    Json rows = Json::array();
    for (int i = 0; i < inst.n(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < inst.n(); ++j) row.push_back(element_to_json(inst.A.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"p", fp.p}, {"d", fp.d}, {"n", inst.n()}, {"A", std::move(rows)}};
}

ASInstance as_from_json(const Json& j) {
    if (!j.is_object()) parse_fail("instance must be an object");
    long long p = get_int(j, "p", 2, 1LL << 30);
    int d = static_cast<int>(get_int(j, "d", 1, 64));
    int n = static_cast<int>(get_int(j, "n", 1, 8));
    const FieldParams& fp = field_params(p, d, 1);
    if (!j.contains("A") || !j["A"].is_array() || j["A"].size() != static_cast<size_t>(n))
        parse_fail("A must be an n x n array");
    GrMat A(fp, n, n);
    for (int i = 0; i < n; ++i) {
        const auto& row = j["A"][static_cast<size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<size_t>(n)) parse_fail("A row length mismatch");
        for (int c = 0; c < n; ++c) A.at(i, c) = entry_from_json(row[static_cast<size_t>(c)], fp);
    }
    return ASInstance{std::move(A)};
}

Json point_to_json(const ClosedPoint& pt) {
    Json coords = Json::array();
    for (const auto& c : pt.coords) coords.push_back(c.coords());
    return Json{{"degree", pt.ext_degree}, {"coords", std::move(coords)}};
}

Json report_to_json(const StratumReport& report) {
    Json recs = Json::array();
    for (const auto& r : report.records) {
        Json rec{{"point", point_to_json(r.point)}};
        if (r.ok) {
            rec["newton"] = polygon_to_json(r.newton);
            rec["break_points"] = break_points_to_json(break_points(r.newton));
            rec["p_rank"] = r.prank;
        } else {
            rec["error"] = errc_name(r.error);
            rec["error_detail"] = r.error_detail;
        }
        recs.push_back(std::move(rec));
    }
    Json np = Json::array();
    for (const auto& [poly, members] : report.newton_strata)
        np.push_back(Json{{"polygon", polygon_to_json(poly)}, {"points", members}});
    Json bp = Json::array();
    for (const auto& [b, members] : report.break_strata)
        bp.push_back(Json{{"break_point", Json::array({b.x, b.y})}, {"points", members}});
    Json pr = Json::array();
    for (const auto& [t, members] : report.prank_strata)
        pr.push_back(Json{{"p_rank", t}, {"points", members}});
    return Json{{"points", std::move(recs)}, {"newton_strata", std::move(np)},
                {"break_point_strata", std::move(bp)}, {"p_rank_strata", std::move(pr)}};
}

}  // namespace crystalline
