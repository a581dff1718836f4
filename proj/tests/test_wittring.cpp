#include <doctest.h>

#include "crystalline/wittring.hpp"

using namespace crystalline;

TEST_CASE("modulus choice") {
    // F_4: least irreducible is x^2 + x + 1
    const auto& fp = field_params(2, 2, 1);
    CHECK(fp.modulus == std::vector<long long>{1, 1});
    // F_8: x^3 + x + 1 precedes x^3 + x^2 + 1
    const auto& f8 = field_params(2, 3, 1);
    CHECK(f8.modulus == std::vector<long long>{1, 1, 0});
    // F_9: x^2 + 1 is the least irreducible over F_3
    const auto& f9 = field_params(3, 2, 1);
    CHECK(f9.modulus == std::vector<long long>{1, 0});
}

TEST_CASE("teichmuller values") {
    const auto& f1 = field_params(3, 1, 1);
    CHECK(teichmuller(GrElt(f1, {2}), 2) == GrElt(field_params(3, 1, 2), {8}));
    CHECK(teichmuller(GrElt(f1, {0}), 3).is_zero());
    CHECK(teichmuller(GrElt(f1, {1}), 3) == GrElt::one(field_params(3, 1, 3)));
    // Teichmuller elements satisfy x^{p^d} = x
    const auto& f4 = field_params(2, 2, 1);
    for (const auto& x : field_elements(2, 2)) {
        GrElt t = teichmuller(x, 3);
        CHECK(gr_pow(t, 4) == t);
    }
}

TEST_CASE("frobenius is u -> u^p and has order d") {
    const auto& fp = field_params(2, 3, 2);
    GrElt u(fp, {0, 1, 0});
    CHECK(frobenius(u, 1) == gr_pow(u, 2));
    CHECK(frobenius(frobenius(frobenius(u, 1), 1), 1) == u);
}

TEST_CASE("valuation and division") {
    const auto& fp = field_params(2, 1, 4);
    GrElt x(fp, {12});  // 4 * 3
    CHECK(valuation(x) == 2);
    CHECK(divide_by_p(x, 2) == GrElt(fp, {3}));
    CHECK(valuation(GrElt::zero(fp)) == 4);
    CHECK_THROWS_AS(gr_inv(GrElt(fp, {2})), Error);
    CHECK(gr_mul(GrElt(fp, {3}), gr_inv(GrElt(fp, {3}))) == GrElt::one(fp));
}

TEST_CASE("embed and project") {
    const auto& fp = field_params(2, 1, 3);
    GrElt x(fp, {5});
    GrElt big = embed(x, 2);
    CHECK(big.params().d == 2);
    CHECK(project_to_subring(big, 1) == x);
    const auto& f4 = field_params(2, 2, 3);
    CHECK_THROWS_AS(embed(GrElt(f4, {1, 1}), 3), Error);
}

TEST_CASE("field element enumeration is complete and deterministic") {
    auto e1 = field_elements(3, 2);
    CHECK(e1.size() == 9);
    auto e2 = field_elements(3, 2);
    for (size_t i = 0; i < e1.size(); ++i) CHECK(e1[i] == e2[i]);
}

TEST_CASE("ring parameter validation") {
    CHECK_THROWS_AS(field_params(4, 1, 1), Error);   // not prime
    CHECK_THROWS_AS(field_params(2, 0, 1), Error);   // bad degree
    CHECK_THROWS_AS(field_params(2, 1, 0), Error);   // bad precision
    CHECK_THROWS_AS(field_params(2, 1, 63), Error);  // p^m over the cap
}
