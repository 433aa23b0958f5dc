#include "tensorwalk/walks.hpp"

#include <stdexcept>

namespace tensorwalk::walks {

std::vector<EndpointTable> count_endpoints(const WalkConfig& config, int n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
    if (!config.in_domain(config.start)) throw std::invalid_argument("start position violates the domain");
    for (const auto& s : config.steps)
        if (s.multiplicity < 1) throw std::invalid_argument("step multiplicity must be >= 1");

    std::vector<EndpointTable> tables(n_max + 1);
    tables[0].length = 0;
    tables[0].counts[config.start] = 1;
    for (int n = 0; n < n_max; ++n) {
        auto& next = tables[n + 1];
        next.length = n + 1;
        for (const auto& [pos, cnt] : tables[n].counts) {
            for (const auto& step : config.steps) {
                if (!step.allowed_at(pos)) continue;
                const Point q{pos[0] + step.vec[0], pos[1] + step.vec[1]};
                if (!config.in_domain(q)) continue;
                next.counts[q] += cnt * step.multiplicity;
            }
        }
    }
    return tables;
}

Sequence excursions(const WalkConfig& config, int n_max) {
    const auto tables = count_endpoints(config, n_max);
    Sequence out;
    out.reserve(n_max + 1);
    for (const auto& t : tables) out.push_back(t.at(config.start));
    return out;
}

Sequence axis_sum(const WalkConfig& config, int axis, int n_max) {
    if (axis != 0 && axis != 1) throw std::invalid_argument("axis must be 0 or 1");
    const auto tables = count_endpoints(config, n_max);
    Sequence out;
    out.reserve(n_max + 1);
    for (const auto& t : tables) {
        BigInt s = 0;
        for (const auto& [pos, cnt] : t.counts)
            if (pos[1 - axis] == 0) s += cnt;
        out.push_back(s);
    }
    return out;
}

namespace {

constexpr LinearConstraint ge0_x{{1, 0}, 0, LinearConstraint::Rel::Ge};
constexpr LinearConstraint ge0_y{{0, 1}, 0, LinearConstraint::Rel::Ge};

StepRule step(int dx, int dy, int mult = 1) { return StepRule{{dx, dy}, mult, {}}; }

void require_no_k(const std::string& name, int k) {
    if (k != 0) throw std::invalid_argument(name + " takes no zero-step parameter");
}

}  // namespace

WalkConfig builtin_config(const std::string& name, int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    WalkConfig cfg;
    cfg.domain = {ge0_x, ge0_y};

    if (name == "octant_g2") {
        cfg.steps = {step(1, 0), step(-1, 1), step(-2, 1), step(-1, 0), step(1, -1), step(2, -1)};
        // zero step blocked on the wall r = 0
        cfg.steps.push_back(StepRule{{0, 0}, 1, {LinearConstraint{{1, 0}, 0, LinearConstraint::Rel::Eq}}});
        if (k > 0) cfg.steps.push_back(step(0, 0, k));
        return cfg;
    }
    if (name == "quadrant_sl3") {
        cfg.steps = {step(1, 0), step(-1, 1), step(0, -1), step(-1, 0), step(1, -1), step(0, 1)};
        if (k > 0) cfg.steps.push_back(step(0, 0, k));
        return cfg;
    }
    if (name == "quadrant_sl3_vector") {
        require_no_k(name, k);
        cfg.steps = {step(1, 0), step(-1, 1), step(0, -1)};
        return cfg;
    }
    if (name == "c2_spin") {
        require_no_k(name, k);
        cfg.steps = {step(1, 0), step(-1, 1), step(1, -1), step(-1, 0)};
        return cfg;
    }
    if (name == "halfline_sl2") {
        require_no_k(name, k);
        cfg.domain = {ge0_x, LinearConstraint{{0, 1}, 0, LinearConstraint::Rel::Eq}};
        cfg.steps = {step(1, 0), step(-1, 0)};
        return cfg;
    }
    if (name == "hesitating8" || name == "vacillating9") {
        require_no_k(name, k);
        // tableau coordinates x >= y >= 0
        cfg.domain = {LinearConstraint{{1, -1}, 0, LinearConstraint::Rel::Ge}, ge0_y};
        cfg.steps = {step(1, 0), step(0, 1), step(-1, 1), step(-1, 0), step(0, -1), step(1, -1)};
        // the row-2 add/remove zero step is blocked on the diagonal x = y
        cfg.steps.push_back(StepRule{{0, 0}, 1, {LinearConstraint{{1, -1}, 0, LinearConstraint::Rel::Eq}}});
        cfg.steps.push_back(step(0, 0, name == "hesitating8" ? 1 : 2));
        return cfg;
    }
    throw std::invalid_argument("unknown walk config: " + name);
}

std::vector<std::string> builtin_config_names() {
    return {"octant_g2",    "quadrant_sl3", "quadrant_sl3_vector", "halfline_sl2",
            "c2_spin",      "hesitating8",  "vacillating9"};
}

}  // namespace tensorwalk::walks
