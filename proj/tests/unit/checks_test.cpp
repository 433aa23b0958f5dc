#include "tensorwalk/checks.hpp"

#include <doctest.h>

#include <algorithm>

using namespace tensorwalk::checks;

TEST_CASE("filtered run and deterministic ordering") {
    CheckOptions opt;
    opt.only = "examples";
    const auto reports = check_all(opt);
    REQUIRE(reports.size() == 3);
    CHECK(std::is_sorted(reports.begin(), reports.end(),
                         [](const auto& a, const auto& b) { return a.name < b.name; }));
    for (const auto& r : reports) CHECK(r.status == CheckReport::Status::pass);
}

TEST_CASE("fault injection trips exactly the targeted check") {
    CheckOptions opt;
    opt.only = "octant.";
    opt.inject_fault = "octant.fig1_rows";
    const auto reports = check_all(opt);
    REQUIRE(reports.size() == 2);
    for (const auto& r : reports) {
        if (r.name == "octant.fig1_rows") {
            CHECK(r.status == CheckReport::Status::fail);
            CHECK(!r.details.empty());
        } else {
            CHECK(r.status == CheckReport::Status::pass);
        }
    }
}

TEST_CASE("every check maps to a criterion") {
    for (const auto& name : check_names()) {
        const int c = criterion_of(name);
        CHECK(c >= 1);
        CHECK(c <= 12);
        CHECK(!criterion_label(c).empty());
    }
    CHECK_THROWS(criterion_of("made.up"));
}
