#include "crystalline/workbench.hpp"

#include "crystalline/slopes.hpp"
#include "crystalline/svg.hpp"
#include "crystalline/verify.hpp"

namespace crystalline {

namespace {

// Run fn at the stored precision, escalating by doubling on
// InsufficientPrecision up to the cap.
template <typename Fn>
Json with_escalation(const Json& input, const WorkbenchOptions& opt, Fn fn) {
    int m = input.is_object() && input.contains("m") && input["m"].is_number_integer()
                ? input["m"].get<int>()
                : 1;
    int attempt_m = opt.precision;  // 0 = use the stored precision
    for (;;) {
        try {
            return fn(attempt_m, attempt_m == 0 ? m : attempt_m);
        } catch (const Error& e) {
            if (e.code() != Errc::insufficient_precision) throw;
            int next = (attempt_m == 0 ? m : attempt_m) * 2;
            if (next > opt.precision_cap)
                fail(Errc::precision_overflow,
                     "precision cap " + std::to_string(opt.precision_cap) + " exhausted");
            attempt_m = next;
        }
    }
}

}  // namespace

Json run_polygon(const Json& input, const WorkbenchOptions& opt) {
    return with_escalation(input, opt, [&](int m_override, int m_used) {
        FCrystal c = crystal_from_json(input, m_override);
        Polygon hodge = hodge_polygon(c);
        Polygon newton = newton_polygon(c);
        return Json{{"precision", m_used},
                    {"hodge", polygon_to_json(hodge)},
                    {"newton", polygon_to_json(newton)},
                    {"break_points", break_points_to_json(break_points(newton))},
                    {"p_rank", p_rank(c)}};
    });
}

Json run_strata(const Json& input, const WorkbenchOptions& opt, std::string* svg_out) {
    return with_escalation(input, opt, [&](int m_override, int m_used) {
        FamilyCrystal fam = family_from_json(input, m_override);
        StratumReport rep = scan(fam, opt.degree, opt.jobs);
        // escalate when any point is precision-starved rather than degenerate
        for (const auto& r : rep.records)
            if (!r.ok && r.error == Errc::insufficient_precision)
                fail(Errc::insufficient_precision, r.error_detail);
        Json out = report_to_json(rep);
        out["precision"] = m_used;
        out["degree"] = opt.degree;
        if (opt.has_step1) {
            std::string detail;
            bool ok = verify_step1_identities(fam, opt.step1_a, opt.step1_b, opt.degree, &detail);
            out["step1"] = Json{{"a", opt.step1_a}, {"b", opt.step1_b}, {"passed", ok},
                                {"detail", detail}};
        }
        if (opt.plot && svg_out) {
            std::vector<Polygon> polys;
            for (const auto& [poly, members] : rep.newton_strata) polys.push_back(poly);
            *svg_out = polygon_svg(polys);
        }
        return out;
    });
}

Json run_asdim(const Json& input, const WorkbenchOptions& opt) {
    if (input.is_object() && input.contains("vars")) {
        FamilyCrystal fam = family_from_json(input, 0);
        StratumReport rep = as_stratify(fam, opt.degree);
        Json recs = Json::array();
        for (const auto& r : rep.records) {
            Json rec{{"point", point_to_json(r.point)}};
            if (r.ok)
                rec["dimension"] = r.prank;
            else {
                rec["error"] = errc_name(r.error);
                rec["error_detail"] = r.error_detail;
            }
            recs.push_back(std::move(rec));
        }
        Json strata = Json::array();
        for (const auto& [t, members] : rep.prank_strata)
            strata.push_back(Json{{"dimension", t}, {"points", members}});
        Json out{{"degree", opt.degree}, {"points", std::move(recs)}, {"strata", std::move(strata)}};
        if (opt.cross_check) {
            int m = fam.rank() + 2;
            StratumReport c3 = scan(corollary3_family(fam, m), opt.degree, opt.jobs);
            bool agree = c3.records.size() == rep.records.size();
            for (size_t i = 0; agree && i < rep.records.size(); ++i)
                agree = rep.records[i].ok && c3.records[i].ok &&
                        rep.records[i].prank == c3.records[i].prank;
            out["cross_check"] = Json{{"corollary3_agrees", agree}};
        }
        return out;
    }
    ASInstance inst = as_from_json(input);
    Json out{{"dimension", as_dimension(inst)}};
    if (opt.cross_check) {
        out["oracle_dimension"] = brute_force_as_dimension(inst, 4);
        out["corollary3_p_rank"] = p_rank(corollary3_crystal(inst, 2 * inst.n() + 2));
    }
    return out;
}

Json run_verify(const WorkbenchOptions& opt) {
    const auto& names = opt.suites.empty() ? suite_names() : opt.suites;
    auto results = run_suites(names, opt.seed);
    Json suites = Json::array();
    bool all = true;
    for (const auto& r : results) {
        suites.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        all = all && r.passed;
    }
    return Json{{"seed", opt.seed}, {"passed", all}, {"suites", std::move(suites)}};
}

}  // namespace crystalline
