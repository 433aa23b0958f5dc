#include "tensorwalk/intpoly.hpp"

#include <doctest.h>

using namespace tensorwalk;

TEST_CASE("polynomial arithmetic and normalization") {
    const IntPoly a({1, 2, 3});
    const IntPoly b({-1, 0, 0, 5});
    CHECK((a + b) == IntPoly({0, 2, 3, 5}));
    CHECK((a - a).is_zero());
    CHECK((a * IntPoly{}).is_zero());
    CHECK((a * IntPoly({0, 1})) == IntPoly({0, 1, 2, 3}));
    CHECK(IntPoly({1, 0, 0}).degree() == 0);  // trailing zeros dropped
    CHECK(a.eval(BigInt(2)) == 17);
    CHECK(a.derivative() == IntPoly({2, 6}));
}

TEST_CASE("Taylor shift") {
    // (n^2)(n+3) shifted: p(n+2)
    const IntPoly p({0, 0, 1});
    CHECK(p.shifted(2) == IntPoly({4, 4, 1}));
    CHECK(p.shifted(-1) == IntPoly({1, -2, 1}));
    CHECK(p.shifted(0) == p);
}

TEST_CASE("content and exact division") {
    const IntPoly p({-6, -12, -18});
    CHECK(p.content() == -6);
    CHECK(p.primitive_part() == IntPoly({1, 2, 3}));
    CHECK(p.divided_by(BigInt(-3)) == IntPoly({2, 4, 6}));
    CHECK_THROWS_AS(p.divided_by(BigInt(4)), std::domain_error);
}

TEST_CASE("polynomial gcd and division") {
    const IntPoly a = IntPoly({-1, 1}) * IntPoly({1, 1}) * IntPoly({2, 3});
    const IntPoly b = IntPoly({-1, 1}) * IntPoly({5, 7});
    CHECK(poly_gcd(a, b) == IntPoly({-1, 1}));
    CHECK(poly_div_exact(a, IntPoly({1, 1})) == IntPoly({-1, 1}) * IntPoly({2, 3}));
    CHECK_THROWS_AS(poly_div_exact(a, IntPoly({5, 7})), std::domain_error);
    CHECK(poly_gcd(IntPoly{}, b) == b.primitive_part());
}

TEST_CASE("rational function reduction invariants") {
    // (n^2-1)/(n-1) reduces to n+1
    const RationalFunction f(IntPoly({-1, 0, 1}), IntPoly({-1, 1}));
    CHECK(f.num() == IntPoly({1, 1}));
    CHECK(f.is_polynomial());
    // denominator sign normalized positive
    const RationalFunction g(IntPoly({1}), IntPoly({2, -4}));
    CHECK(g.den().leading() > 0);
    const RationalFunction h = g - g;
    CHECK(h.is_zero());
    CHECK(h.den() == IntPoly({1}));
    CHECK_THROWS_AS(RationalFunction(IntPoly({1}), IntPoly{}), std::domain_error);
    CHECK_THROWS_AS(g / h, std::domain_error);
}

TEST_CASE("rational function field operations") {
    const RationalFunction n(IntPoly({0, 1}));        // t
    const RationalFunction one = RationalFunction::constant(1);
    const RationalFunction inv = one / n;             // 1/t
    CHECK(n * inv == one);
    CHECK((n + inv).num() == IntPoly({1, 0, 1}));
    // (1/t)' = -1/t^2
    CHECK(inv.derivative() == RationalFunction(IntPoly({-1}), IntPoly({0, 0, 1})));
}
