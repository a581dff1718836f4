#include <doctest.h>

#include "crystalline/serialize.hpp"
#include "crystalline/strata.hpp"
#include "crystalline/svg.hpp"

using namespace crystalline;

namespace {

FamilyCrystal worked_family(long long p, int m) {
    const FieldParams& fp = field_params(p, 1, m);
    std::vector<PolyEntry> entries(4);
    entries[0] = {Monomial{{1}, GrElt::one(fp)}};
    entries[1] = {Monomial{{0}, GrElt::from_int(fp, p)}};
    entries[2] = {Monomial{{0}, GrElt::from_int(fp, p)}};
    return FamilyCrystal(fp, 1, 2, {"t"}, std::move(entries));
}

}  // namespace

TEST_CASE("closed point enumeration") {
    FamilyCrystal fam = worked_family(2, 5);
    auto d1 = enumerate_closed_points(fam, 1);
    CHECK(d1.size() == 2);  // {0, 1}
    auto d2 = enumerate_closed_points(fam, 2);
    CHECK(d2.size() == 3);  // {0, 1, {w, w^2}}
    CHECK(d2[2].ext_degree == 2);
}

TEST_CASE("evaluation at points") {
    FamilyCrystal fam = worked_family(2, 5);
    auto pts = enumerate_closed_points(fam, 1);
    // t = 0: [[0, p],[p, 0]]
    GrMat m0 = evaluate_matrix_at(fam, pts[0]);
    CHECK(m0.at(0, 0).is_zero());
    CHECK(m0.at(0, 1) == GrElt::from_int(m0.params(), 2));
    // t = 1: unit in the corner
    GrMat m1 = evaluate_matrix_at(fam, pts[1]);
    CHECK(valuation(m1.at(0, 0)) == 0);
}

TEST_CASE("scan strata on the worked family") {
    FamilyCrystal fam = worked_family(2, 5);
    StratumReport rep = scan(fam, 3, 2);
    REQUIRE(rep.newton_strata.size() == 2);
    Polygon nu1 = Polygon::from_slopes(PolyKind::newton, {Rat(1), Rat(1)});
    size_t nu1_count = 0;
    for (const auto& [poly, members] : rep.newton_strata)
        if (poly == nu1) nu1_count = members.size();
    CHECK(nu1_count == 1);
    // complement of S_{(1,0)} is the single point t = 0
    for (const auto& [bp, members] : rep.break_strata) {
        if (bp == BreakPoint{1, 0}) CHECK(members.size() == rep.records.size() - 1);
    }
    std::vector<size_t> mem;
    CHECK(check_specialization(rep, nu1, &mem));
    CHECK(mem.size() == 1);
}

TEST_CASE("step1 identities") {
    std::string detail;
    CHECK(verify_step1_identities(worked_family(2, 5), 1, 0, 3, &detail));
    CHECK(verify_step1_identities(worked_family(3, 5), 0, 0, 2, &detail));
    CHECK(verify_step1_identities(worked_family(2, 5), -2, 1, 2, &detail));  // off-lattice: vacuous
}

TEST_CASE("family serialization roundtrip") {
    FamilyCrystal fam = worked_family(2, 5);
    Json j = family_to_json(fam);
    FamilyCrystal back = family_from_json(j);
    CHECK(back.rank() == 2);
    CHECK(back.vars() == std::vector<std::string>{"t"});
    StratumReport a = scan(fam, 2, 1), b = scan(back, 2, 1);
    CHECK(report_to_json(a) == report_to_json(b));
}

TEST_CASE("svg output is deterministic") {
    Polygon nu1 = Polygon::from_slopes(PolyKind::newton, {Rat(1), Rat(1)});
    Polygon nu2 = Polygon::from_slopes(PolyKind::newton, {Rat(0), Rat(2)});
    std::string s1 = polygon_svg({nu1, nu2});
    std::string s2 = polygon_svg({nu1, nu2});
    CHECK(s1 == s2);
    CHECK(s1.find("<polyline") != std::string::npos);
    CHECK(s1.find("nu_2") != std::string::npos);
    std::string named = polygon_svg({nu1}, {"slope-one"});
    CHECK(named.find("slope-one") != std::string::npos);
}
