// Regression gate: runs the full check registry and reports one line per
// criterion. Exit code 0 only when every criterion passes.

#include "tensorwalk/checks.hpp"

#include <cstdio>
#include <map>
#include <vector>

int main() {
    using namespace tensorwalk::checks;
    const auto reports = check_all();

    std::map<int, std::vector<const CheckReport*>> by_criterion;
    for (const auto& r : reports) by_criterion[criterion_of(r.name)].push_back(&r);

    bool all_ok = true;
    for (int c = 1; c <= 12; ++c) {
        bool ok = true;
        for (const auto* r : by_criterion[c])
            if (r->status == CheckReport::Status::fail) ok = false;
        std::printf("[%2d/12] %s  %s\n", c, ok ? "PASS" : "FAIL", criterion_label(c).c_str());
        for (const auto* r : by_criterion[c]) {
            if (r->status == CheckReport::Status::fail)
                std::printf("        failed: %s — %s\n", r->name.c_str(), r->details.c_str());
            else if (!r->details.empty())
                std::printf("        note:   %s — %s\n", r->name.c_str(), r->details.c_str());
        }
        all_ok = all_ok && ok;
    }
    std::printf("%s\n", all_ok ? "acceptance: all criteria passed" : "acceptance: FAILURES above");
    return all_ok ? 0 : 1;
}
