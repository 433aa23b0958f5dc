#include "tensorwalk/branching.hpp"

#include "tensorwalk/walks.hpp"

#include <sstream>
#include <stdexcept>

namespace tensorwalk::branching {

BranchingTable::BranchingTable(int max_deg) : d_(max_deg) {
    if (max_deg < 0) throw std::invalid_argument("max_deg must be nonnegative");
    const std::size_t n = static_cast<std::size_t>(d_ + 1);
    m_.assign(n * n * n * n, 0);
}

namespace {
std::size_t table_index(int d, int r, int s, int p, int q) {
    const std::size_t n = static_cast<std::size_t>(d + 1);
    return ((static_cast<std::size_t>(r) * n + s) * n + p) * n + q;
}
}  // namespace

std::uint64_t BranchingTable::at(int r, int s, int p, int q) const {
    if (r < 0 || s < 0 || p < 0 || q < 0) return 0;
    if (r > d_ || s > d_ || p > d_ || q > d_)
        throw std::out_of_range("branching index beyond table truncation");
    return m_[table_index(d_, r, s, p, q)];
}

std::uint64_t& BranchingTable::slot(int r, int s, int p, int q) {
    return m_[table_index(d_, r, s, p, q)];
}

BranchingTable expand_branching_gf(int max_deg) {
    const int d = max_deg;
    BranchingTable t(d);
    // numerator: sum_r X^r + sum_{j>=1} (xyY)^j
    for (int r = 0; r <= d; ++r) t.slot(r, 0, 0, 0) += 1;
    for (int j = 1; j <= d; ++j) t.slot(0, j, j, j) += 1;
    // each denominator factor 1/(1 - u) is a prefix sum along u's exponent
    struct Mono {
        int dr, ds, dp, dq;
    };
    const Mono monos[4] = {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}};
    for (const auto& u : monos) {
        for (int r = u.dr; r <= d; ++r)
            for (int s = u.ds; s <= d; ++s)
                for (int p = u.dp; p <= d; ++p)
                    for (int q = u.dq; q <= d; ++q)
                        t.slot(r, s, p, q) += t.slot(r - u.dr, s - u.ds, p - u.dp, q - u.dq);
    }
    return t;
}

namespace {

Report mismatch(const std::string& what) { return Report{false, what}; }

}  // namespace

Report verify_axis_excursions(int k, int n_max) {
    const Sequence axis = walks::axis_sum(walks::builtin_config("octant_g2", k), 0, n_max);
    const Sequence exc = walks::excursions(walks::builtin_config("quadrant_sl3", k + 1), n_max);
    for (int n = 0; n <= n_max; ++n) {
        if (axis[n] != exc[n]) {
            std::ostringstream os;
            os << "k=" << k << " n=" << n << ": axis " << axis[n].str() << " != excursions "
               << exc[n].str();
            return mismatch(os.str());
        }
    }
    return {};
}

Report verify_restriction(int k, int p, int q, int n_max) {
    // walks of length n stay within coordinate sum 2n, so 2*n_max truncation
    // is a safe bound for the table
    const int d = 2 * n_max;
    const BranchingTable table = expand_branching_gf(d);
    const auto quad = walks::count_endpoints(walks::builtin_config("quadrant_sl3", k + 1), n_max);
    const auto oct = walks::count_endpoints(walks::builtin_config("octant_g2", k), n_max);
    for (int n = 0; n <= n_max; ++n) {
        const BigInt lhs = quad[n].at({p, q});
        BigInt rhs = 0;
        for (const auto& [pos, cnt] : oct[n].counts) rhs += BigInt(table.at(pos[0], pos[1], p, q)) * cnt;
        if (lhs != rhs) {
            std::ostringstream os;
            os << "k=" << k << " (p,q)=(" << p << "," << q << ") n=" << n << ": quadrant "
               << lhs.str() << " != branching sum " << rhs.str();
            return mismatch(os.str());
        }
    }
    return {};
}

Report octant_polynomials_check(int n_max, int k_max) {
    if (n_max > 3) throw std::invalid_argument("polynomial tables are published for n <= 3 only");
    for (int k = 0; k <= k_max; ++k) {
        const auto tables = walks::count_endpoints(walks::builtin_config("octant_g2", k), n_max);
        const BigInt kk = k;
        // cells keyed by weight (r,s); layout read off the octant picture
        // (column x = r+s, row y = s)
        const auto expect = [&](int n) -> std::vector<std::pair<walks::Point, BigInt>> {
            switch (n) {
                case 0:
                    return {{{0, 0}, 1}};
                case 1:
                    return {{{0, 0}, kk}, {{1, 0}, 1}};
                case 2:
                    return {{{0, 1}, 1}, {{0, 0}, 1 + kk * kk}, {{1, 0}, 1 + 2 * kk}, {{2, 0}, 1}};
                default:
                    return {{{0, 1}, 2 + 3 * kk},
                            {{1, 1}, 2},
                            {{0, 0}, 1 + 3 * kk + kk * kk * kk},
                            {{1, 0}, 4 + 3 * kk + 3 * kk * kk},
                            {{2, 0}, 3 + 3 * kk},
                            {{3, 0}, 1}};
            }
        };
        for (int n = 0; n <= n_max; ++n) {
            auto cells = expect(n);
            // zero-count cells (k = 0 can zero the origin cell) are dropped on
            // both sides before comparing
            std::map<walks::Point, BigInt> want;
            for (auto& [pos, v] : cells)
                if (v != 0) want.emplace(pos, v);
            if (want != tables[n].counts) {
                std::ostringstream os;
                os << "k=" << k << " n=" << n << ": endpoint table differs from published polynomials";
                return mismatch(os.str());
            }
        }
        // bottom-row sums 1, 1+k, 3+2k+k^2, 9+9k+3k^2+k^3
        const Sequence sums = walks::axis_sum(walks::builtin_config("octant_g2", k), 0, n_max);
        const BigInt expect_sum[4] = {1, 1 + kk, 3 + 2 * kk + kk * kk,
                                      9 + 9 * kk + 3 * kk * kk + kk * kk * kk};
        for (int n = 0; n <= n_max; ++n) {
            if (sums[n] != expect_sum[n]) {
                std::ostringstream os;
                os << "k=" << k << " n=" << n << ": bottom-row sum " << sums[n].str() << " != "
                   << expect_sum[n].str();
                return mismatch(os.str());
            }
        }
    }
    return {};
}

}  // namespace tensorwalk::branching
