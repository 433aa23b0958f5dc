#include "tensorwalk/branching.hpp"

#include "tensorwalk/fixtures.hpp"
#include "tensorwalk/transforms.hpp"
#include "tensorwalk/walks.hpp"

#include <doctest.h>

using namespace tensorwalk;
using namespace tensorwalk::branching;

TEST_CASE("table basics") {
    const auto table = expand_branching_gf(8);
    CHECK(table.at(0, 0, 0, 0) == 1);
    for (int r = 0; r <= 8; ++r)
        for (int s = 0; s <= 8; ++s)
            CHECK(table.at(r, s, 0, 0) == (s == 0 ? 1u : 0u));
    // the seven-dimensional module restricts to both fundamentals plus a unit
    CHECK(table.at(1, 0, 1, 0) == 1);
    CHECK(table.at(1, 0, 0, 1) == 1);
    CHECK(table.at(1, 0, 0, 0) == 1);
    CHECK(table.at(1, 0, 1, 1) == 0);
    // the fourteen-dimensional module: adjoint plus both fundamentals
    CHECK(table.at(0, 1, 1, 1) == 1);
    CHECK(table.at(0, 1, 1, 0) == 1);
    CHECK(table.at(0, 1, 0, 1) == 1);
    CHECK(table.at(0, 1, 0, 0) == 0);
}

TEST_CASE("truncation stability") {
    const auto small = expand_branching_gf(6);
    const auto large = expand_branching_gf(10);
    for (int r = 0; r <= 6; ++r)
        for (int s = 0; s <= 6; ++s)
            for (int p = 0; p <= 6; ++p)
                for (int q = 0; q <= 6; ++q)
                    CHECK(small.at(r, s, p, q) == large.at(r, s, p, q));
}

TEST_CASE("axis walks match quadrant excursions") {
    for (int k = 0; k <= 3; ++k) {
        const auto rep = verify_axis_excursions(k, 8);
        INFO(rep.detail);
        CHECK(rep.ok);
    }
    // pinned published values: k = 0 gives the second quadrant row, k = 1 the
    // Baxter row
    CHECK(walks::axis_sum(walks::builtin_config("octant_g2", 0), 0, 8) == fixtures::fig2_row(1));
    CHECK(walks::axis_sum(walks::builtin_config("octant_g2", 1), 0, 8) == fixtures::fig2_row(2));
    // k = 3: both sides continue the binomial transform of the fourth row
    const Sequence expect = transforms::bt_power(
        walks::excursions(walks::builtin_config("quadrant_sl3", 3), 6), 1);
    CHECK(walks::axis_sum(walks::builtin_config("octant_g2", 3), 0, 6) == expect);
}

TEST_CASE("restriction identity on sample points") {
    for (const auto& [k, p, q] : {std::array<int, 3>{0, 0, 0}, {0, 1, 0}, {1, 0, 1}, {2, 1, 1}}) {
        const auto rep = verify_restriction(k, p, q, 8);
        INFO(rep.detail);
        CHECK(rep.ok);
    }
}

TEST_CASE("octant endpoint polynomials") {
    const auto rep = octant_polynomials_check(3, 4);
    INFO(rep.detail);
    CHECK(rep.ok);
    CHECK_THROWS_AS(octant_polynomials_check(4, 2), std::invalid_argument);
}
