#include <doctest.h>

#include "crystalline/polygon.hpp"

using namespace crystalline;

TEST_CASE("from_slopes sorts and merges") {
    Polygon p = Polygon::from_slopes(PolyKind::newton, {Rat(1), Rat(0), Rat(1), Rat(1, 2), Rat(1, 2)});
    REQUIRE(p.segments().size() == 3);
    CHECK(p.segments()[0].slope == Rat(0));
    CHECK(p.segments()[1].slope == Rat(1, 2));
    CHECK(p.segments()[1].mult == 2);
    CHECK(p.segments()[2].mult == 2);
    CHECK(p.rank() == 5);
}

TEST_CASE("kind invariants") {
    // Hodge slopes must be nonnegative integers
    CHECK_THROWS_AS(Polygon::from_slopes(PolyKind::hodge, {Rat(1, 2), Rat(1, 2)}), Error);
    CHECK_THROWS_AS(Polygon::from_slopes(PolyKind::hodge, {Rat(-1)}), Error);
    // Newton vertices must be integral: slope 1/2 with multiplicity 1 is not
    CHECK_THROWS_AS(Polygon::from_slopes(PolyKind::newton, {Rat(1, 2)}), Error);
    CHECK_NOTHROW(Polygon::from_slopes(PolyKind::newton, {Rat(1, 2), Rat(1, 2)}));
}

TEST_CASE("break points and values") {
    Polygon p = Polygon::from_slopes(PolyKind::newton, {Rat(0), Rat(2)});
    auto bps = break_points(p);
    REQUIRE(bps.size() == 3);
    CHECK(bps[0] == BreakPoint{0, 0});
    CHECK(bps[1] == BreakPoint{1, 0});
    CHECK(bps[2] == BreakPoint{2, 2});
    CHECK(has_break_point(p, BreakPoint{1, 0}));
    CHECK(!has_break_point(p, BreakPoint{1, 1}));
    CHECK(p.value_at(1) == Rat(0));
    CHECK(p.value_at(2) == Rat(2));
    // no interior vertex when all slopes agree
    Polygon q = Polygon::from_slopes(PolyKind::newton, {Rat(1), Rat(1)});
    CHECK(break_points(q).size() == 2);
}

TEST_CASE("lies_above") {
    Polygon lo = Polygon::from_slopes(PolyKind::newton, {Rat(0), Rat(2)});
    Polygon hi = Polygon::from_slopes(PolyKind::newton, {Rat(1), Rat(1)});
    CHECK(lies_above(hi, lo));
    CHECK(!lies_above(lo, hi));
    CHECK(lies_above(lo, lo));
    Polygon other = Polygon::from_slopes(PolyKind::newton, {Rat(0)});
    CHECK_THROWS_AS(lies_above(lo, other), Error);
    // transitivity on a nested triple
    Polygon lo2 = Polygon::from_slopes(PolyKind::newton, {Rat(0), Rat(1)});
    Polygon mid = Polygon::from_slopes(PolyKind::newton, {Rat(1, 2), Rat(1, 2)});
    CHECK(lies_above(hi, mid));
    CHECK(lies_above(mid, lo2));
    CHECK(lies_above(hi, lo2));
}
