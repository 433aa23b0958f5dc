#pragma once

#include "tensorwalk/bigint.hpp"

#include <array>
#include <map>
#include <optional>
#include <vector>

namespace tensorwalk::combinat {

// Brute-force enumeration oracles. Deliberately direct: these arbitrate the
// fast engines, so they favour obviously-correct over clever.

struct PartitionFilter {
    bool forbid_singletons = false;
    std::optional<int> max_crossing;           // forbid k-crossings for this k
    std::optional<int> max_enhanced_crossing;  // forbid enhanced k-crossings
};

/// Set partitions of [n] passing the filter, by exhaustive enumeration over
/// restricted growth strings. Guard: n <= 12 (TENSORWALK_MAX_N raises it).
BigInt count_set_partitions(int n, const PartitionFilter& filter);

struct InversionFilter {
    bool forbid_wdec3 = false;  // no i<j<k with x_i >= x_j >= x_k
    bool forbid_fixed = false;  // no x_i = i
};

/// Sequences (x_1..x_n), 1 <= x_i <= i, passing the filter. Guard: n <= 12.
BigInt count_inversion_sequences(int n, const InversionFilter& filter);

enum class TableauKind { hesitating, vacillating };

/// Endpoint-resolved counts of height-2 tableau walks of semilength n in
/// coordinates x >= y >= 0 (shape (x, y)). The row-2 add/remove zero step is
/// forbidden on x = y; exclude_row1_zero removes one unconditioned zero step.
std::map<std::array<int, 2>, BigInt> tableau_walk_table(TableauKind kind, int n,
                                                        bool exclude_row1_zero = false);

/// Single-shape count; height 2 only. Guard: n <= 14.
BigInt count_tableau_walks(TableauKind kind, int n, int height, std::array<int, 2> shape,
                           bool exclude_row1_zero = false);

/// Fillings of the 3-row, m-column rectangle with rows strictly increasing
/// and columns weakly increasing; content[i] is the multiplicity of i+1.
/// Guard: m <= 4 unless override_guard.
BigInt count_rect_tableaux(int m, const std::vector<int>& content, bool override_guard = false);

enum class QuadrantSumVariant { s0, s1a, s1b, s2 };

/// The multinomial-weighted rectangular-tableaux sums; variant sX evaluates
/// to S_X(n) (s1a and s1b are two expressions for S_1). Guard: n <= 10.
BigInt quadrant_sum(QuadrantSumVariant variant, int n);

}  // namespace tensorwalk::combinat
