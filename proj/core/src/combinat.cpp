#include "tensorwalk/combinat.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace tensorwalk::combinat {

namespace {

using Arc = std::pair<int, int>;

// k arcs (i_1,j_1)..(i_k,j_k) with i_1<...<i_k < j_1<...<j_k (enhanced: <=).
bool has_k_crossing(const std::vector<Arc>& arcs, int k, bool enhanced) {
    const int m = static_cast<int>(arcs.size());
    if (m < k) return false;
    std::vector<int> idx(k);
    std::function<bool(int, int)> rec = [&](int depth, int from) {
        if (depth == k) {
            for (int t = 0; t + 1 < k; ++t) {
                if (arcs[idx[t]].first >= arcs[idx[t + 1]].first) return false;
                if (arcs[idx[t]].second >= arcs[idx[t + 1]].second) return false;
            }
            const int last_i = arcs[idx[k - 1]].first;
            const int first_j = arcs[idx[0]].second;
            return enhanced ? last_i <= first_j : last_i < first_j;
        }
        for (int t = from; t < m; ++t) {
            idx[depth] = t;
            if (rec(depth + 1, t + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

}  // namespace

BigInt count_set_partitions(int n, const PartitionFilter& filter) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (n > max_n_guard(12)) throw std::invalid_argument("n exceeds the enumeration guard");
    if (n == 0) return 1;

    BigInt count = 0;
    std::vector<int> rgs(n);           // restricted growth string
    std::vector<int> last(n + 1, 0);   // last element (1-based) seen per block
    std::vector<int> size(n + 1, 0);   // block sizes
    std::vector<Arc> arcs;

    // depth-first over restricted growth strings; arcs join numerically
    // adjacent elements of a block
    std::function<void(int, int)> rec = [&](int pos, int max_block) {
        if (pos == n) {
            if (filter.forbid_singletons) {
                for (int b = 0; b < max_block; ++b)
                    if (size[b] == 1) return;
            }
            if (filter.max_crossing && has_k_crossing(arcs, *filter.max_crossing, false)) return;
            if (filter.max_enhanced_crossing &&
                has_k_crossing(arcs, *filter.max_enhanced_crossing, true))
                return;
            ++count;
            return;
        }
        const int hi = std::min(max_block, pos);
        for (int b = 0; b <= hi; ++b) {
            rgs[pos] = b;
            const int prev_last = last[b];
            const int prev_size = size[b];
            last[b] = pos + 1;
            size[b] = prev_size + 1;
            bool pushed = false;
            if (prev_last != 0) {
                arcs.emplace_back(prev_last, pos + 1);
                pushed = true;
            }
            rec(pos + 1, std::max(max_block, b + 1));
            if (pushed) arcs.pop_back();
            last[b] = prev_last;
            size[b] = prev_size;
        }
    };
    rec(0, 0);
    return count;
}

BigInt count_inversion_sequences(int n, const InversionFilter& filter) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (n > max_n_guard(12)) throw std::invalid_argument("n exceeds the enumeration guard");
    BigInt count = 0;
    std::vector<int> x;
    x.reserve(n);
    std::function<void()> rec = [&]() {
        if (static_cast<int>(x.size()) == n) {
            ++count;
            return;
        }
        const int i = static_cast<int>(x.size()) + 1;
        for (int v = 1; v <= i; ++v) {
            if (filter.forbid_fixed && v == i) continue;
            if (filter.forbid_wdec3) {
                bool bad = false;
                for (std::size_t a = 0; a + 1 < x.size() && !bad; ++a)
                    for (std::size_t b = a + 1; b < x.size() && !bad; ++b)
                        bad = x[a] >= x[b] && x[b] >= v;
                if (bad) continue;
            }
            x.push_back(v);
            rec();
            x.pop_back();
        }
    };
    rec();
    return count;
}

std::map<std::array<int, 2>, BigInt> tableau_walk_table(TableauKind kind, int n,
                                                        bool exclude_row1_zero) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    struct Step {
        int dx, dy, mult;
        bool wall;  // forbidden on x = y
    };
    std::vector<Step> steps = {{1, 0, 1, false},  {0, 1, 1, false},  {-1, 1, 1, false},
                               {-1, 0, 1, false}, {0, -1, 1, false}, {1, -1, 1, false},
                               {0, 0, 1, true}};
    int free_zeros = (kind == TableauKind::hesitating ? 1 : 2) - (exclude_row1_zero ? 1 : 0);
    if (free_zeros > 0) steps.push_back({0, 0, free_zeros, false});

    std::map<std::array<int, 2>, BigInt> cur;
    cur[{0, 0}] = 1;
    for (int step = 0; step < n; ++step) {
        std::map<std::array<int, 2>, BigInt> next;
        for (const auto& [p, c] : cur) {
            for (const auto& s : steps) {
                if (s.wall && p[0] == p[1]) continue;
                const int x = p[0] + s.dx, y = p[1] + s.dy;
                if (x < y || y < 0) continue;
                next[{x, y}] += c * s.mult;
            }
        }
        cur = std::move(next);
    }
    return cur;
}

BigInt count_tableau_walks(TableauKind kind, int n, int height, std::array<int, 2> shape,
                           bool exclude_row1_zero) {
    if (height != 2) throw std::invalid_argument("only height 2 is supported");
    if (n > max_n_guard(14)) throw std::invalid_argument("n exceeds the enumeration guard");
    const auto table = tableau_walk_table(kind, n, exclude_row1_zero);
    const auto it = table.find(shape);
    return it == table.end() ? BigInt(0) : it->second;
}

namespace {

BigInt count_rect_tableaux_impl(int m, const std::vector<int>& content) {
    const int total = 3 * m;
    int sum = 0;
    for (int c : content) {
        if (c < 0) throw std::invalid_argument("negative content multiplicity");
        sum += c;
    }
    if (sum != total) throw std::invalid_argument("content size must equal 3m");
    if (m == 0) return 1;

    const int letters = static_cast<int>(content.size());
    std::vector<int> rem = content;
    std::vector<std::vector<int>> grid(3, std::vector<int>(m, 0));
    BigInt count = 0;
    // cell-by-cell backtracking in row-major order
    std::function<void(int)> rec = [&](int pos) {
        if (pos == total) {
            ++count;
            return;
        }
        const int r = pos / m, c = pos % m;
        int lo = 1;
        if (c > 0) lo = std::max(lo, grid[r][c - 1] + 1);  // rows strict
        if (r > 0) lo = std::max(lo, grid[r - 1][c]);      // columns weak
        for (int v = lo; v <= letters; ++v) {
            if (rem[v - 1] == 0) continue;
            --rem[v - 1];
            grid[r][c] = v;
            rec(pos + 1);
            ++rem[v - 1];
        }
    };
    rec(0);
    return count;
}

BigInt multinomial(int n, std::initializer_list<int> parts) {
    BigInt r = 1;
    int used = 0;
    for (int p : parts) {
        for (int i = 1; i <= p; ++i) {
            r *= used + i;
            r /= i;
        }
        used += p;
    }
    if (used != n) throw std::invalid_argument("multinomial parts must sum to n");
    return r;
}

std::vector<int> content_of(int ones, int twos, int threes = 0) {
    std::vector<int> c;
    c.insert(c.end(), ones, 1);
    c.insert(c.end(), twos, 2);
    c.insert(c.end(), threes, 3);
    return c;
}

int distinct_letters(const std::vector<int>& content) {
    int d = 0;
    for (int c : content)
        if (c > 0) ++d;
    return d;
}

// Terms with m > #letters vanish (a strict row of length m needs m distinct
// values), so they are skipped rather than enumerated.
BigInt sst_term(int m, const std::vector<int>& content) {
    if (m > distinct_letters(content)) return 0;
    return count_rect_tableaux_impl(m, content);
}

}  // namespace

BigInt count_rect_tableaux(int m, const std::vector<int>& content, bool override_guard) {
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    if (!override_guard && m > max_n_guard(4))
        throw std::invalid_argument("m exceeds the enumeration guard");
    return count_rect_tableaux_impl(m, content);
}

BigInt quadrant_sum(QuadrantSumVariant variant, int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (n > max_n_guard(10)) throw std::invalid_argument("n exceeds the enumeration guard");
    BigInt total = 0;
    switch (variant) {
        case QuadrantSumVariant::s0:
            for (int b = 0; b <= n; ++b) {
                const int a = n - b;
                if ((a + 2 * b) % 3) continue;
                total += multinomial(n, {a, b}) * sst_term((a + 2 * b) / 3, content_of(a, b));
            }
            break;
        case QuadrantSumVariant::s1a:
            for (int a = 0; a <= n; ++a)
                for (int b = 0; a + b <= n; ++b) {
                    const int c = n - a - b;
                    if ((b + 2 * c) % 3) continue;
                    total += multinomial(n, {a, b, c}) * sst_term((b + 2 * c) / 3, content_of(b, c));
                }
            break;
        case QuadrantSumVariant::s1b:
            for (int a = 0; a <= n; ++a)
                for (int b = 0; a + b <= n; ++b) {
                    const int c = n - a - b;
                    if ((a + 2 * b + 3 * c) % 3) continue;
                    total += multinomial(n, {a, b, c}) *
                             sst_term((a + 2 * b + 3 * c) / 3, content_of(a, b, c));
                }
            break;
        case QuadrantSumVariant::s2:
            for (int a = 0; a <= n; ++a)
                for (int b = 0; a + b <= n; ++b)
                    for (int c = 0; a + b + c <= n; ++c) {
                        const int d = n - a - b - c;
                        if ((b + 2 * c + 3 * d) % 3) continue;
                        total += multinomial(n, {a, b, c, d}) *
                                 sst_term((b + 2 * c + 3 * d) / 3, content_of(b, c, d));
                    }
            break;
    }
    return total;
}

}  // namespace tensorwalk::combinat
