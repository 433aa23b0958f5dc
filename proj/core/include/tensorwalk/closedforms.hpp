#pragma once

#include "tensorwalk/bigint.hpp"
#include "tensorwalk/powerseries.hpp"

#include <string>
#include <vector>

namespace tensorwalk::series {

/// Names: t3_hypergeometric_simple, t3_hypergeometric_integral,
/// t3_weierstrass, baxter_gf.
std::vector<std::string> closed_form_names();

struct ClosedFormReport {
    std::string name;
    bool ok = false;
    int checked_to = -1;     // last coefficient index compared
    int first_mismatch = -1; // -1 when ok
    std::string detail;
};

/// Builds the named closed-form expression as an exact truncated series,
/// asserts its numerator valuation, and compares coefficient-by-coefficient
/// against the recurrence-generated reference sequence to order N.
ClosedFormReport verify_closed_form(const std::string& name, int order);

struct AsymptoticsReport {
    std::vector<int> samples;
    std::vector<double> ratios;         // r_n = a(n) n^7 / 7^n per sample
    std::vector<double> extrapolated;   // 2 r_{2n} - r_n for consecutive sample pairs
    double target = 0.0;
    double best_rel_dev = 0.0;          // relative deviation of the last extrapolation
    bool monotone = false;              // r_n nondecreasing over the samples
};

/// Growth-constant check for T3: ratios at the given sample points (each
/// must double the previous one) plus Richardson extrapolation against
/// 4117715 sqrt(3) / (864 pi).
AsymptoticsReport asymptotic_estimate(const std::vector<int>& samples);

}  // namespace tensorwalk::series
