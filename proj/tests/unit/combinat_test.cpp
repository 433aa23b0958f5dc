#include "tensorwalk/combinat.hpp"

#include "tensorwalk/fixtures.hpp"
#include "tensorwalk/walks.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

using namespace tensorwalk;
using namespace tensorwalk::combinat;

TEST_CASE("set partition filters at n = 5") {
    unsetenv("TENSORWALK_MAX_N");  // guard assertions below assume defaults
    PartitionFilter enhanced;
    enhanced.max_enhanced_crossing = 3;
    CHECK(count_set_partitions(5, enhanced) == 51);

    PartitionFilter both = enhanced;
    both.forbid_singletons = true;
    CHECK(count_set_partitions(5, both) == 10);

    PartitionFilter crossing;
    crossing.max_crossing = 3;
    CHECK(count_set_partitions(5, crossing) == 52);

    CHECK(count_set_partitions(0, both) == 1);
    CHECK(count_set_partitions(6, crossing) == 202);  // first Bell-number deviation
    CHECK_THROWS_AS(count_set_partitions(13, enhanced), std::invalid_argument);
}

TEST_CASE("inversion sequences") {
    CHECK(count_inversion_sequences(1, {true, false}) == 1);
    CHECK(count_inversion_sequences(5, {true, false}) == 51);
    CHECK(count_inversion_sequences(6, {false, false}) == 720);  // 6! with no filter

    // the singleton-free candidate reading: x_1 = 1 is both forced and
    // forbidden, so nothing survives past n = 0 (recorded, not hidden)
    CHECK(count_inversion_sequences(0, {true, true}) == 1);
    for (int n = 1; n <= 6; ++n) CHECK(count_inversion_sequences(n, {true, true}) == 0);
}

TEST_CASE("tableau walks against the published rows") {
    Sequence hes, hesx, vac;
    for (int n = 0; n <= 9; ++n) {
        hes.push_back(count_tableau_walks(TableauKind::hesitating, n, 2, {0, 0}));
        hesx.push_back(count_tableau_walks(TableauKind::hesitating, n, 2, {0, 0}, true));
        vac.push_back(count_tableau_walks(TableauKind::vacillating, n, 2, {0, 0}));
    }
    CHECK(hes == fixtures::fig1_row(1));
    CHECK(hesx == fixtures::fig1_row(0));
    CHECK(vac == fixtures::fig1_row(2));
    CHECK(count_tableau_walks(TableauKind::hesitating, 5, 2, {0, 0}) == 51);
    CHECK(count_tableau_walks(TableauKind::vacillating, 4, 2, {0, 0}) == 52);
    CHECK_THROWS_AS(count_tableau_walks(TableauKind::hesitating, 3, 3, {0, 0}),
                    std::invalid_argument);
}

TEST_CASE("tableau walks refine the octant endpoint tables") {
    const auto walk = walks::count_endpoints(walks::builtin_config("octant_g2", 1), 6);
    const auto table = tableau_walk_table(TableauKind::hesitating, 6);
    std::map<std::array<int, 2>, BigInt> mapped;
    for (const auto& [pos, cnt] : walk[6].counts) mapped[{pos[0] + pos[1], pos[1]}] = cnt;
    CHECK(mapped == table);
}

TEST_CASE("independent tableau DP agrees with the generic walk engine") {
    // the tableau-coordinate builtins run through the generic counter; this
    // module's dedicated DP must match them endpoint for endpoint
    const struct {
        const char* config;
        TableauKind kind;
    } pairs[] = {{"hesitating8", TableauKind::hesitating}, {"vacillating9", TableauKind::vacillating}};
    for (const auto& pc : pairs) {
        const auto engine = walks::count_endpoints(walks::builtin_config(pc.config), 10);
        for (int n = 0; n <= 10; ++n)
            CHECK(engine[n].counts == tableau_walk_table(pc.kind, n));
    }
}

TEST_CASE("rectangular tableaux") {
    CHECK(count_rect_tableaux(1, {1, 2}) == 1);
    CHECK(count_rect_tableaux(0, {}) == 1);
    CHECK_THROWS_AS(count_rect_tableaux(1, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(count_rect_tableaux(5, std::vector<int>(15, 1)), std::invalid_argument);
    CHECK(count_rect_tableaux(5, std::vector<int>(15, 1), true) > 0);

    std::mt19937 rng(5);
    for (int trial = 0; trial < 15; ++trial) {
        std::uniform_int_distribution<int> mdist(1, 3);
        const int m = mdist(rng);
        std::vector<int> content;
        int left = 3 * m;
        while (left > 0) {
            std::uniform_int_distribution<int> part(0, left);
            const int p = part(rng);
            content.push_back(p);
            left -= p;
        }
        std::shuffle(content.begin(), content.end(), rng);
        std::vector<int> sorted = content;
        std::sort(sorted.begin(), sorted.end());
        CHECK(count_rect_tableaux(m, content) == count_rect_tableaux(m, sorted));
    }
}

TEST_CASE("multinomial-weighted tableau sums") {
    CHECK(quadrant_sum(QuadrantSumVariant::s0, 2) == 2);
    CHECK(quadrant_sum(QuadrantSumVariant::s0, 4) == 12);
    CHECK(quadrant_sum(QuadrantSumVariant::s1a, 3) == 9);
    CHECK(quadrant_sum(QuadrantSumVariant::s1b, 3) == 9);
    CHECK(quadrant_sum(QuadrantSumVariant::s2, 4) == 92);
    CHECK_THROWS_AS(quadrant_sum(QuadrantSumVariant::s2, 11), std::invalid_argument);
}
