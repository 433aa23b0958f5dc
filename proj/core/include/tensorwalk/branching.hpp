#pragma once

#include "tensorwalk/bigint.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tensorwalk::branching {

/// Multiplicities m^{(r,s)}_{(p,q)} of the rank-2 restriction rule, stored
/// densely for all indices <= max_deg.
class BranchingTable {
public:
    explicit BranchingTable(int max_deg);

    int max_deg() const { return d_; }
    std::uint64_t at(int r, int s, int p, int q) const;
    std::uint64_t& slot(int r, int s, int p, int q);

private:
    int d_;
    std::vector<std::uint64_t> m_;
};

/// Expands the branching generating function
///   [ (1-X)^-1 + xyY (1-xyY)^-1 ] / [ (1-xX)(1-yX)(1-xY)(1-yY) ]
/// to all exponents <= D, via one seed pass plus four geometric-factor
/// prefix-sum passes.
BranchingTable expand_branching_gf(int max_deg);

struct Report {
    bool ok = true;
    std::string detail;  // first mismatch when ok is false
};

/// axis_sum(octant_g2(k), axis 0) == excursions(quadrant_sl3(k+1)) for n <= n_max.
Report verify_axis_excursions(int k, int n_max);

/// Quadrant endpoint (p,q) counts equal the branching-weighted sum of octant
/// endpoint counts, for n <= n_max (table truncation 2*n_max).
Report verify_restriction(int k, int p, int q, int n_max);

/// Octant endpoint counts for n <= 3 equal the published polynomial-in-k
/// table, for k = 0..k_max; also checks the bottom-row sums.
Report octant_polynomials_check(int n_max = 3, int k_max = 4);

}  // namespace tensorwalk::branching
