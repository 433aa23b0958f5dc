#include "tensorwalk/holonomic.hpp"

#include "tensorwalk/fixtures.hpp"
#include "tensorwalk/walks.hpp"

#include <doctest.h>

using namespace tensorwalk;
using namespace tensorwalk::holonomic;
using tensorwalk::fixtures::paper_diffop;
using tensorwalk::fixtures::paper_recurrence;

TEST_CASE("unroll reproduces the published rows") {
    CHECK(unroll(paper_recurrence("t3_rec"), {1, 0, 1}, 9) == fixtures::fig1_row(0));
    CHECK(unroll(paper_recurrence("e3_rec"), {1, 1}, 9) == fixtures::fig1_row(1));
    CHECK(unroll(paper_recurrence("s3_rec"), {1, 3}, 8) == fixtures::fig2_row(3));
    for (int k = 0; k <= 3; ++k) {
        const Sequence row = fixtures::fig2_row(k);
        const Sequence init(row.begin(), row.begin() + 4);
        CHECK(unroll(paper_recurrence("quadrant_rec", k), init, 8) == row);
    }
}

TEST_CASE("unroll failure modes are loud") {
    PRecurrence vanishing;
    vanishing.coeff = {IntPoly({1}), IntPoly({-2, 1})};  // leading (n-2) vanishes at n=2
    CHECK_THROWS_AS(unroll(vanishing, {1}, 6), std::domain_error);

    PRecurrence halving;
    halving.coeff = {IntPoly({1}), IntPoly({2})};  // a(n+1) = -a(n)/2
    CHECK_THROWS_AS(unroll(halving, {1}, 4), std::domain_error);
    const auto rational = unroll_rational(halving, {1}, 4);
    CHECK(rational[4] == BigRational(1, 16));

    CHECK_THROWS_AS(unroll(paper_recurrence("t3_rec"), {1, 0}, 9), std::invalid_argument);
}

TEST_CASE("check_recurrence locates the first violation") {
    const Sequence t3 = fixtures::fig1_row(0);
    CHECK(!check_recurrence(paper_recurrence("t3_rec"), t3).has_value());

    Sequence perturbed = t3;
    perturbed[5] += 1;
    // term 5 first enters the window at n = 2
    CHECK(check_recurrence(paper_recurrence("t3_rec"), perturbed) == 2);

    const Sequence s0_ext = walks::excursions(walks::builtin_config("quadrant_sl3", 0), 12);
    CHECK(!check_recurrence(paper_recurrence("quadrant_rec", 0), s0_ext).has_value());
}

TEST_CASE("guessing recovers published and classical recurrences") {
    const Sequence ones(20, BigInt(1));
    const auto constant = guess_recurrence(ones, 2, 1);
    REQUIRE(constant.has_value());
    CHECK(constant->coeff == std::vector<IntPoly>{IntPoly({-1}), IntPoly({1})});

    const Sequence t3 = walks::excursions(walks::builtin_config("octant_g2", 0), 39);
    const auto guessed = guess_recurrence(t3, 4, 3);
    REQUIRE(guessed.has_value());
    CHECK(same_recurrence(*guessed, paper_recurrence("t3_rec")));

    // the Baxter-type row satisfies an order-2 recurrence; certify on walk data
    const Sequence s2 = walks::excursions(walks::builtin_config("quadrant_sl3", 2), 60);
    const auto baxter = guess_recurrence(Sequence(s2.begin(), s2.begin() + 41), 4, 3);
    REQUIRE(baxter.has_value());
    CHECK(baxter->order() == 2);
    CHECK(!check_recurrence(*baxter, s2).has_value());

    CHECK_THROWS_AS(guess_recurrence(Sequence{1, 2, 3}, 4, 4), std::invalid_argument);
}

TEST_CASE("guess-then-unroll returns a right divisor") {
    const Sequence s3 = unroll(paper_recurrence("s3_rec"), {1, 3}, 45);
    const auto guessed = guess_recurrence(s3, 4, 3);
    REQUIRE(guessed.has_value());
    CHECK(shift_right_divide(paper_recurrence("s3_rec"), *guessed).has_value());
}

TEST_CASE("operator product identities") {
    CHECK(diffop_mul(paper_diffop("Q"), paper_diffop("L3")) == paper_diffop("L6"));
    CHECK(diffop_mul(paper_diffop("L2"), paper_diffop("L1")) == paper_diffop("L3"));

    // commutator [d, t] = 1
    const DiffOp d = diffop_from_polys({IntPoly{}, IntPoly({1})});
    const DiffOp t = diffop_from_polys({IntPoly({0, 1})});
    const DiffOp dt = diffop_mul(d, t);
    REQUIRE(dt.order() == 1);
    CHECK(dt.coeff[0] == RationalFunction(IntPoly({1})));
    const DiffOp td = diffop_mul(t, d);
    CHECK(td.coeff[0].is_zero());
    CHECK(dt.coeff[1] == td.coeff[1]);
}

TEST_CASE("series annihilation and inhomogeneous remainder") {
    const Sequence t3 = unroll(paper_recurrence("t3_rec"), {1, 0, 1}, 40);
    const auto zero = diffop_apply(paper_diffop("L3"), series::from_sequence(t3));
    for (int i = 0; i <= zero.order(); ++i) CHECK(zero[i] == 0);

    const DiffOp d = diffop_from_polys({IntPoly{}, IntPoly({1})});
    const auto dconst = diffop_apply(d, series::from_poly(IntPoly({1}), 10));
    for (int i = 0; i <= dconst.order(); ++i) CHECK(dconst[i] == 0);

    // the order-2 operator applied to its series leaves the constant 30
    const Sequence e3 = unroll(paper_recurrence("e3_rec"), {1, 1}, 40);
    const auto rem = diffop_apply(paper_diffop("e3_ode"), series::from_sequence(e3));
    CHECK(rem[0] == 30);
    for (int i = 1; i <= rem.order(); ++i) CHECK(rem[i] == 0);

    // homogenized by one differentiation, it annihilates the series
    const DiffOp homog = diffop_mul(d, paper_diffop("e3_ode"));
    const auto zero2 = diffop_apply(homog, series::from_sequence(e3));
    for (int i = 0; i <= zero2.order(); ++i) CHECK(zero2[i] == 0);

    CHECK_THROWS_AS(diffop_apply(paper_diffop("L1"), series::from_sequence(t3)),
                    std::domain_error);
}

TEST_CASE("clearing denominators yields a polynomial operator") {
    const DiffOp cleared = diffop_clear_denominators(paper_diffop("L1"));
    CHECK(cleared.polynomial_coeffs());
    // t P L1 = t P d - (t P' - 5 P)
    CHECK(cleared.coeff[1] == RationalFunction(IntPoly({0, 1}) * IntPoly({1, 15, 46, 66, 28})));
}

TEST_CASE("operator to recurrence conversion") {
    // d - 1 annihilates exp: (n+1) a(n+1) - a(n) = 0
    const DiffOp d_minus_1 = diffop_from_polys({IntPoly({-1}), IntPoly({1})});
    const PRecurrence exp_rec = ode_to_recurrence(d_minus_1);
    REQUIRE(exp_rec.order() == 1);
    CHECK(exp_rec.coeff[0] == IntPoly({-1}));
    CHECK(exp_rec.coeff[1] == IntPoly({1, 1}));

    const Sequence t3 = unroll(paper_recurrence("t3_rec"), {1, 0, 1}, 30);
    const PRecurrence from_l3 = ode_to_recurrence(paper_diffop("L3"));
    CHECK(!check_recurrence(from_l3, t3).has_value());
    CHECK(shift_right_divide(from_l3, paper_recurrence("t3_rec")).has_value());

    const Sequence s3 = unroll(paper_recurrence("s3_rec"), {1, 3}, 30);
    CHECK(!check_recurrence(ode_to_recurrence(paper_diffop("s3_ode")), s3).has_value());

    CHECK_THROWS_AS(ode_to_recurrence(paper_diffop("L1")), std::invalid_argument);
}

TEST_CASE("right division in the shift algebra") {
    const auto self = shift_right_divide(paper_recurrence("t3_rec"), paper_recurrence("t3_rec"));
    REQUIRE(self.has_value());
    CHECK(self->order() == 0);
    CHECK(self->coeff[0] == RationalFunction::constant(1));

    const auto quotient =
        shift_right_divide(paper_recurrence("quadrant_rec", 3), paper_recurrence("s3_rec"));
    REQUIRE(quotient.has_value());
    CHECK(quotient->order() == 2);

    CHECK(!shift_right_divide(paper_recurrence("t3_rec"), paper_recurrence("e3_rec")).has_value());
}

TEST_CASE("fixture registry") {
    const auto l3 = paper_diffop("L3");
    CHECK(l3.order() == 3);
    CHECK(l3.coeff[3] ==
          RationalFunction(IntPoly({1, 2}) * IntPoly({-1, 7}) * IntPoly({1, 1}) *
                           IntPoly::monomial(1, 2)));
    CHECK(std::holds_alternative<PRecurrence>(fixtures::paper_operator("quadrant_rec", 3)));
    CHECK(std::holds_alternative<DiffOp>(fixtures::paper_operator("P")));
    CHECK_THROWS_AS(fixtures::paper_operator("nonsense"), std::invalid_argument);
}
