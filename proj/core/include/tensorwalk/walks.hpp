#pragma once

#include "tensorwalk/bigint.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace tensorwalk::walks {

using Point = std::array<int, 2>;

/// coeffs . p  REL  bound, with REL one of >= or ==.
struct LinearConstraint {
    enum class Rel { Ge, Eq };
    std::array<int, 2> coeffs{};
    int bound = 0;
    Rel rel = Rel::Ge;

    bool holds(const Point& p) const {
        const long v = static_cast<long>(coeffs[0]) * p[0] + static_cast<long>(coeffs[1]) * p[1];
        return rel == Rel::Ge ? v >= bound : v == bound;
    }
    bool operator==(const LinearConstraint&) const = default;
};

/// A step taken with the given multiplicity, removed at positions satisfying
/// every constraint in forbidden_when (empty list: always allowed).
struct StepRule {
    std::array<int, 2> vec{};
    int multiplicity = 1;
    std::vector<LinearConstraint> forbidden_when;

    bool allowed_at(const Point& p) const {
        if (forbidden_when.empty()) return true;
        for (const auto& c : forbidden_when)
            if (!c.holds(p)) return true;
        return false;
    }
    bool operator==(const StepRule&) const = default;
};

struct WalkConfig {
    std::vector<LinearConstraint> domain;
    std::vector<StepRule> steps;
    Point start{0, 0};

    bool in_domain(const Point& p) const {
        for (const auto& c : domain)
            if (!c.holds(p)) return false;
        return true;
    }
    bool operator==(const WalkConfig&) const = default;
};

/// Endpoint-resolved counts of walks of a fixed length. Positions with zero
/// count are not stored.
struct EndpointTable {
    int length = 0;
    std::map<Point, BigInt> counts;

    BigInt at(const Point& p) const {
        const auto it = counts.find(p);
        return it == counts.end() ? BigInt(0) : it->second;
    }
};

/// Layer-by-layer dynamic program over the sparse frontier; table[n] holds
/// all length-n endpoint counts. Throws if the start violates the domain.
std::vector<EndpointTable> count_endpoints(const WalkConfig& config, int n_max);

/// Walks returning to the start position.
Sequence excursions(const WalkConfig& config, int n_max);

/// Walks ending on a coordinate axis: axis 0 sums endpoints (r, 0),
/// axis 1 sums endpoints (0, s).
Sequence axis_sum(const WalkConfig& config, int axis, int n_max);

/// Built-in models. k counts extra unconditioned zero steps and is accepted
/// only by octant_g2 and quadrant_sl3.
///
/// Names: octant_g2, quadrant_sl3, quadrant_sl3_vector, halfline_sl2,
/// c2_spin, hesitating8, vacillating9.
WalkConfig builtin_config(const std::string& name, int k = 0);

std::vector<std::string> builtin_config_names();

}  // namespace tensorwalk::walks
