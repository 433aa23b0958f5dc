#include "tensorwalk/transforms.hpp"

#include "tensorwalk/fixtures.hpp"

#include <doctest.h>

#include <random>

using namespace tensorwalk;
using namespace tensorwalk::transforms;

TEST_CASE("binomial transform on the octant pair") {
    const Sequence t3{1, 0, 1, 1, 4, 10};
    const Sequence e3{1, 1, 2, 5, 15, 51};
    CHECK(bt_power(t3, 1) == e3);
    CHECK(bt_power(e3, -1) == t3);
    CHECK(bt_power(t3, 0) == t3);
}

TEST_CASE("second transform links the quadrant rows") {
    const Sequence s0{1, 0, 2, 2, 12, 30};
    CHECK(bt_power(s0, 2) == Sequence{1, 2, 6, 22, 92, 422});
}

TEST_CASE("group law on random sequences") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> term(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        Sequence a(8);
        for (auto& v : a) v = term(rng);
        for (long j = -3; j <= 3; ++j)
            for (long k = -3; k <= 3; ++k)
                CHECK(bt_power(bt_power(a, j), k) == bt_power(a, j + k));
    }
}

TEST_CASE("series form agrees with the sequence form") {
    const Sequence t3 = fixtures::fig1_row(0);
    const auto g = series::from_sequence(t3);
    CHECK(bt_series(g, 1) == series::from_sequence(bt_power(t3, 1)));
    CHECK(bt_series(g, 0) == g);
    CHECK(bt_series(bt_series(g, 2), -2) == g);

    std::mt19937 rng(11);
    std::uniform_int_distribution<long> term(-5, 5);
    for (int trial = 0; trial < 10; ++trial) {
        Sequence a(7);
        for (auto& v : a) v = term(rng);
        for (long k : {-2L, 1L, 3L})
            CHECK(bt_series(series::from_sequence(a), k) ==
                  series::from_sequence(bt_power(a, k)));
    }
}
