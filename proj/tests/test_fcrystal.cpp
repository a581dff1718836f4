#include <doctest.h>

#include "crystalline/fcrystal.hpp"
#include "crystalline/slopes.hpp"

using namespace crystalline;

TEST_CASE("standard_E polygons") {
    FCrystal e = standard_E(1, 2, 1, 2, 1, 4);
    Polygon np = newton_polygon(e);
    REQUIRE(np.segments().size() == 1);
    CHECK(np.segments()[0].slope == Rat(1, 2));
    CHECK(np.segments()[0].mult == 2);
    Polygon hp = hodge_polygon(e);
    REQUIRE(hp.segments().size() == 2);
    CHECK(hp.segments()[0].slope == Rat(0));
    CHECK(hp.segments()[1].slope == Rat(1));
    CHECK_THROWS_AS(standard_E(2, 4, 1, 2, 1, 8), Error);  // gcd != 1
    CHECK_THROWS_AS(standard_E(1, 2, 1, 2, 1, 1), Error);  // m <= a
}

TEST_CASE("worked 2x2 example over F_p") {
    // matrix [[t, p],[p, 0]] at t = 1 and t = 0
    const auto& fp = field_params(2, 1, 5);
    GrMat m1(fp, 2, 2);
    m1.at(0, 0) = GrElt::one(fp);
    m1.at(0, 1) = GrElt::from_int(fp, 2);
    m1.at(1, 0) = GrElt::from_int(fp, 2);
    FCrystal c1(1, m1);
    Polygon np1 = newton_polygon(c1);
    REQUIRE(np1.segments().size() == 2);
    CHECK(np1.segments()[0].slope == Rat(0));
    CHECK(np1.segments()[1].slope == Rat(2));
    CHECK(p_rank(c1) == 1);
    CHECK(fixed_point_dimension(c1) == 1);

    GrMat m0(fp, 2, 2);
    m0.at(0, 1) = GrElt::from_int(fp, 2);
    m0.at(1, 0) = GrElt::from_int(fp, 2);
    FCrystal c0(1, m0);
    Polygon np0 = newton_polygon(c0);
    REQUIRE(np0.segments().size() == 1);
    CHECK(np0.segments()[0].slope == Rat(1));
    CHECK(p_rank(c0) == 0);
}

TEST_CASE("constructions") {
    // m = 12 keeps the determinant valuations of the tensor and iterate
    // constructions (8 and 4) below the working precision
    FCrystal a = standard_E(0, 1, 1, 3, 1, 12);
    FCrystal b = standard_E(2, 1, 1, 3, 1, 12);
    FCrystal s = direct_sum(a, b);
    auto slopes = newton_polygon(s).slopes();
    REQUIRE(slopes.size() == 2);
    CHECK(slopes[0] == Rat(0));
    CHECK(slopes[1] == Rat(2));
    // tensor: slopes add
    FCrystal t = tensor_product(s, s);
    auto ts = newton_polygon(t).slopes();
    REQUIRE(ts.size() == 4);
    CHECK(ts[0] == Rat(0));
    CHECK(ts[3] == Rat(4));
    // iterate scales
    auto is = newton_polygon(iterate(s, 2)).slopes();
    CHECK(is[1] == Rat(4));
    // exterior square of rank 2 = determinant slope
    auto ws = newton_polygon(exterior_power(s, 2)).slopes();
    REQUIRE(ws.size() == 1);
    CHECK(ws[0] == Rat(2));
    // wedge^0 is the unit crystal with twist 1
    FCrystal w0 = exterior_power(s, 0);
    CHECK(w0.rank() == 1);
    CHECK(w0.twist() == 1);
    CHECK(newton_polygon(w0).slopes()[0] == Rat(0));
}

TEST_CASE("not a crystal") {
    const auto& fp = field_params(2, 1, 2);
    GrMat z(fp, 2, 2);  // zero matrix: det = 0 mod p^m
    CHECK_THROWS_AS(FCrystal(1, z), Error);
}

TEST_CASE("is_divisible_by certificate") {
    FCrystal e = standard_E(1, 2, 1, 2, 1, 6);
    CHECK(is_divisible_by(e, Rat(1, 2), 3));
    CHECK(!is_divisible_by(e, Rat(1), 3));
    CHECK(is_divisible_by(e, Rat(0), 3));
}
