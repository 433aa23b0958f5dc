#include "tensorwalk/powerseries.hpp"

#include "tensorwalk/fixtures.hpp"
#include "tensorwalk/holonomic.hpp"
#include "tensorwalk/transforms.hpp"

#include <doctest.h>

#include <random>

using namespace tensorwalk;
using namespace tensorwalk::series;

namespace {

PowerSeries geometric(int order) {
    PowerSeries g(order);
    for (int i = 0; i <= order; ++i) g[i] = 1;
    return g;
}

}  // namespace

TEST_CASE("ring operations") {
    const int n = 12;
    const PowerSeries one_minus_t = from_poly(IntPoly({1, -1}), n);
    CHECK(ps_mul(geometric(n), one_minus_t) == from_poly(IntPoly({1}), n));

    const PowerSeries nb = ps_div(from_poly(IntPoly({1}), n), from_poly(IntPoly({-1, 1}) * IntPoly({-1, 1}) * IntPoly({-1, 1}), n));
    for (int i = 0; i <= n; ++i) CHECK(nb[i] == BigRational(-binomial(i + 2, 2)));  // 1/(t-1)^3

    const PowerSeries pos = rf_to_series(IntPoly({1}), IntPoly({1, -1}) * IntPoly({1, -1}) * IntPoly({1, -1}), n);
    for (int i = 0; i <= n; ++i) CHECK(pos[i] == BigRational(binomial(i + 2, 2)));

    const PowerSeries sq = rf_to_series(IntPoly({1}), IntPoly({1, -1}) * IntPoly({1, -1}), n);
    for (int i = 0; i <= n; ++i) CHECK(sq[i] == i + 1);  // 1,2,3,4,...

    // prefactor used by the simple closed form: constant term (0+1)^2 * 5 / (0-1)
    const PowerSeries r1 =
        rf_to_series(IntPoly({1, 2, 1}) * IntPoly({5, 60, 45, 214}), IntPoly({-1, 1}), 5);
    CHECK(r1[0] == -5);

    CHECK_THROWS_AS(ps_div(geometric(n), from_poly(IntPoly({0, 1}), n)), std::domain_error);
    CHECK_THROWS_AS(ps_add(geometric(3), geometric(4)), std::invalid_argument);
}

TEST_CASE("composition") {
    const int n = 10;
    PowerSeries t_sq(n);
    t_sq[2] = 1;
    const PowerSeries composed = ps_compose(geometric(6), t_sq.truncated(n));
    for (int i = 0; i <= n; ++i) CHECK(composed[i] == (i % 2 == 0 ? 1 : 0));
    CHECK_THROWS_AS(ps_compose(geometric(n), geometric(n)), std::domain_error);
}

TEST_CASE("substitution argument expands as expected") {
    // 27 t^2 (1+t) / (1-t)^3, checked against a direct negative-binomial build
    const int n = 10;
    const PowerSeries phi = rf_to_series(IntPoly({0, 0, 27, 27}), IntPoly({1, -3, 3, -1}), n);
    PowerSeries direct(n);
    for (int i = 0; i <= n; ++i) {
        // [t^i] 27 t^2 (1+t) sum binom(m+2,2) t^m
        BigRational c = 0;
        if (i >= 2) c += BigRational(27 * binomial(i, 2));
        if (i >= 3) c += BigRational(27 * binomial(i - 1, 2));
        direct[i] = c;
    }
    CHECK(phi == direct);
    CHECK(phi[2] == 27);
    CHECK(phi[3] == 108);
    CHECK(phi[4] == 243);
}

TEST_CASE("rational powers") {
    const int n = 8;
    const PowerSeries root = ps_rational_power(from_poly(IntPoly({1, 1}), n), BigRational(1, 2));
    CHECK(root[0] == 1);
    CHECK(root[1] == BigRational(1, 2));
    CHECK(root[2] == BigRational(-1, 8));
    CHECK(ps_rational_power(from_poly(IntPoly({1, 3, 3}), n), BigRational(0)) ==
          from_poly(IntPoly({1}), n));

    // (g^(-1/4))^4 * g == 1 for the quartic with unit constant term
    const PowerSeries g = from_poly(IntPoly({-1, 1}) * IntPoly({-1, 3, 21, 25}), 20);
    const PowerSeries r = ps_rational_power(g, BigRational(-1, 4));
    const PowerSeries fourth = ps_mul(ps_mul(r, r), ps_mul(r, r));
    CHECK(ps_mul(fourth, g) == from_poly(IntPoly({1}), 20));

    CHECK_THROWS_AS(ps_rational_power(from_poly(IntPoly({2, 1}), 4), BigRational(1, 2)),
                    std::domain_error);
}

TEST_CASE("integration and differentiation") {
    const PowerSeries one = from_poly(IntPoly({1}), 5);
    CHECK(ps_integrate(one)[1] == 1);
    CHECK(ps_integrate(one)[0] == 0);

    PowerSeries a(6);
    for (int i = 0; i <= 6; ++i) a[i] = BigRational(i + 3, i + 1);
    const PowerSeries back = ps_integrate(ps_derivative(a));
    for (int i = 1; i <= 6; ++i) CHECK(back[i] == a[i]);
    CHECK(back[0] == 0);
}

TEST_CASE("hypergeometric series") {
    const int n = 12;
    PowerSeries z(n);
    z[1] = 1;
    const PowerSeries f = hypergeom_2f1(BigRational(1, 3), BigRational(2, 3), BigRational(1), z);
    CHECK(f[0] == 1);
    CHECK(f[1] == BigRational(2, 9));

    CHECK(hypergeom_2f1(BigRational(1, 2), BigRational(5), BigRational(3), PowerSeries(n)) ==
          from_poly(IntPoly({1}), n));

    CHECK(hypergeom_2f1(BigRational(1), BigRational(1), BigRational(1), z) == geometric(n));

    CHECK_THROWS_AS(hypergeom_2f1(BigRational(1), BigRational(1), BigRational(-2), z),
                    std::invalid_argument);
}

TEST_CASE("hypergeometric differential equation, directly and after substitution") {
    using holonomic::diffop_apply;
    using holonomic::diffop_from_polys;
    const int n = 24;
    // 9z(1-z) F'' + 9(1-2z) F' - 2F = 0 for F = 2F1(1/3,2/3;1;z)
    const auto op = diffop_from_polys(
        {IntPoly({-2}), IntPoly({9, -18}), IntPoly({0, 9, -9})});
    PowerSeries z(n);
    z[1] = 1;
    const PowerSeries f = hypergeom_2f1(BigRational(1, 3), BigRational(2, 3), BigRational(1), z);
    const auto res = diffop_apply(op, f);
    for (int i = 0; i <= res.order(); ++i) CHECK(res[i] == 0);

    // pushed through phi: phi(1-phi) (F''w phi) + (1-2phi)(F'w phi) * 9 - 2 (Fw phi), evaluated
    // with series composition
    const PowerSeries phi = rf_to_series(IntPoly({0, 0, 27, 27}), IntPoly({1, -3, 3, -1}), n);
    const PowerSeries f2 = hypergeom_2f1(BigRational(4, 3), BigRational(5, 3), BigRational(2), z);
    // F' = (ab/c) 2F1(a+1,b+1;c+1;z) with ab/c = 2/9
    const PowerSeries fp = ps_scale(f2, BigRational(2, 9));
    const PowerSeries fpp = ps_derivative(fp).truncated(n);  // top coefficient unused below
    const PowerSeries one = from_poly(IntPoly({1}), n);
    const PowerSeries lhs = ps_add(
        ps_add(ps_scale(ps_mul(ps_mul(phi, ps_sub(one, phi)), ps_compose(fpp, phi)), 9),
               ps_scale(ps_mul(ps_sub(one, ps_scale(phi, 2)), ps_compose(fp, phi)), 9)),
        ps_scale(ps_compose(f, phi), -2));
    for (int i = 0; i + 2 <= n; ++i) CHECK(lhs[i] == 0);
}

TEST_CASE("product-then-divide round trip") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    for (int trial = 0; trial < 15; ++trial) {
        PowerSeries a(9), b(9);
        for (int i = 0; i <= 9; ++i) {
            a[i] = BigRational(num(rng), den(rng));
            b[i] = BigRational(num(rng), den(rng));
        }
        if (b[0] == 0) b[0] = 1;
        CHECK(ps_div(ps_mul(a, b), b) == a);
    }
}

TEST_CASE("generating-function identity between the first two octant rows") {
    // T(t) = (1/(1+t)) E(t/(1+t)) up to order 20
    const int n = 20;
    const Sequence t3 = holonomic::unroll(fixtures::paper_recurrence("t3_rec"), {1, 0, 1}, n);
    const Sequence e3 = holonomic::unroll(fixtures::paper_recurrence("e3_rec"), {1, 1}, n);
    const PowerSeries inner = rf_to_series(IntPoly({0, 1}), IntPoly({1, 1}), n);
    const PowerSeries rhs = ps_mul(rf_to_series(IntPoly({1}), IntPoly({1, 1}), n),
                                   ps_compose(from_sequence(e3), inner));
    CHECK(rhs == from_sequence(t3));
}
