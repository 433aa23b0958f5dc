#include "tensorwalk/holonomic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tensorwalk::holonomic {

namespace {

void require_valid(const PRecurrence& rec) {
    if (rec.coeff.empty()) throw std::invalid_argument("empty recurrence");
    if (rec.coeff.back().is_zero())
        throw std::invalid_argument("leading recurrence polynomial is identically zero");
}

}  // namespace

PRecurrence normalized(const PRecurrence& rec) {
    require_valid(rec);
    BigInt g = 0;
    for (const auto& p : rec.coeff) g = boost::multiprecision::gcd(g, p.content());
    g = boost::multiprecision::abs(g);
    if (g == 0) g = 1;
    if (rec.coeff.back().leading() < 0) g = -g;
    PRecurrence out;
    out.coeff.reserve(rec.coeff.size());
    for (const auto& p : rec.coeff) out.coeff.push_back(p.divided_by(g));
    return out;
}

bool same_recurrence(const PRecurrence& a, const PRecurrence& b) {
    return normalized(a) == normalized(b);
}

Sequence unroll(const PRecurrence& rec, const Sequence& initial, int n_max) {
    require_valid(rec);
    const int r = rec.order();
    if (static_cast<int>(initial.size()) < r)
        throw std::invalid_argument("need at least `order` initial terms");
    Sequence a = initial;
    for (int n = static_cast<int>(a.size()) - r; static_cast<int>(a.size()) <= n_max; ++n) {
        const BigInt lead = rec.coeff[r].eval(n);
        if (lead == 0)
            throw std::domain_error("leading coefficient vanishes at n = " + std::to_string(n));
        BigInt s = 0;
        for (int j = 0; j < r; ++j) s += rec.coeff[j].eval(n) * a[n + j];
        if (s % lead != 0)
            throw std::domain_error("recurrence step is not integral at n = " + std::to_string(n));
        a.push_back(-s / lead);
    }
    a.resize(n_max + 1);
    return a;
}

std::vector<BigRational> unroll_rational(const PRecurrence& rec, const Sequence& initial, int n_max) {
    require_valid(rec);
    const int r = rec.order();
    if (static_cast<int>(initial.size()) < r)
        throw std::invalid_argument("need at least `order` initial terms");
    std::vector<BigRational> a;
    for (const auto& v : initial) a.emplace_back(v);
    for (int n = static_cast<int>(a.size()) - r; static_cast<int>(a.size()) <= n_max; ++n) {
        const BigInt lead = rec.coeff[r].eval(n);
        if (lead == 0)
            throw std::domain_error("leading coefficient vanishes at n = " + std::to_string(n));
        BigRational s = 0;
        for (int j = 0; j < r; ++j) s += BigRational(rec.coeff[j].eval(n)) * a[n + j];
        a.push_back(-s / BigRational(lead));
    }
    a.resize(n_max + 1);
    return a;
}

std::optional<int> check_recurrence(const PRecurrence& rec, const Sequence& a) {
    require_valid(rec);
    const int r = rec.order();
    if (static_cast<int>(a.size()) <= r) throw std::invalid_argument("sequence shorter than the order");
    for (int n = 0; n + r < static_cast<int>(a.size()); ++n) {
        BigInt s = 0;
        for (int j = 0; j <= r; ++j) s += rec.coeff[j].eval(n) * a[n + j];
        if (s != 0) return n;
    }
    return std::nullopt;
}

namespace {

/// Nullspace vector of an integer matrix (rows x cols, rows >= cols), by
/// fraction-free forward elimination and back substitution, with denominators
/// cleared and content removed. Empty when the columns are independent.
std::vector<BigInt> integer_nullspace_vector(std::vector<std::vector<BigInt>> m, int cols) {
    const int rows = static_cast<int>(m.size());
    std::vector<int> pivot_col;
    BigInt prev = 1;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int sel = -1;
        for (int i = row; i < rows; ++i)
            if (m[i][col] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(m[row], m[sel]);
        for (int i = row + 1; i < rows; ++i) {
            // Bareiss step keeps entries integral with controlled growth
            for (int j = col + 1; j < cols; ++j)
                m[i][j] = (m[row][col] * m[i][j] - m[i][col] * m[row][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[row][col];
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    int free_col = -1;
    for (int c = 0; c < cols; ++c)
        if (!is_pivot[c]) { free_col = c; break; }
    if (free_col < 0) return {};

    // back-substitute with the free variable set to 1, over rationals
    std::vector<BigRational> x(cols, BigRational(0));
    x[free_col] = 1;
    for (int i = static_cast<int>(pivot_col.size()) - 1; i >= 0; --i) {
        const int pc = pivot_col[i];
        BigRational s = 0;
        for (int j = pc + 1; j < cols; ++j)
            if (x[j] != 0) s += BigRational(m[i][j]) * x[j];
        x[pc] = -s / BigRational(m[i][pc]);
    }
    BigInt l = 1;
    for (const auto& v : x) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(v));
    std::vector<BigInt> out(cols);
    BigInt g = 0;
    for (int c = 0; c < cols; ++c) {
        out[c] = boost::multiprecision::numerator(x[c]) * (l / boost::multiprecision::denominator(x[c]));
        g = boost::multiprecision::gcd(g, out[c]);
    }
    for (auto& v : out) v /= g;
    return out;
}

}  // namespace

std::optional<PRecurrence> guess_recurrence(const Sequence& a, int max_order, int max_degree,
                                            int surplus) {
    const int len = static_cast<int>(a.size());
    if (len < (max_order + 1) * (max_degree + 1) + surplus)
        throw std::invalid_argument("insufficient data for the requested guessing bounds");
    for (int r = 0; r <= max_order; ++r) {
        for (int d = 0; d <= max_degree; ++d) {
            const int cols = (r + 1) * (d + 1);
            const int rows = len - r;
            if (rows < cols + surplus) continue;
            std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(cols));
            for (int n = 0; n < rows; ++n) {
                BigInt npow = 1;
                std::vector<BigInt> powers(d + 1);
                for (int e = 0; e <= d; ++e) {
                    powers[e] = npow;
                    npow *= n;
                }
                for (int j = 0; j <= r; ++j)
                    for (int e = 0; e <= d; ++e) m[n][j * (d + 1) + e] = powers[e] * a[n + j];
            }
            const auto v = integer_nullspace_vector(std::move(m), cols);
            if (v.empty()) continue;
            PRecurrence rec;
            for (int j = 0; j <= r; ++j) {
                std::vector<BigInt> cs(v.begin() + j * (d + 1), v.begin() + (j + 1) * (d + 1));
                rec.coeff.emplace_back(std::move(cs));
            }
            if (rec.coeff.back().is_zero()) continue;  // really lower order; keep searching
            if (check_recurrence(rec, a).has_value()) continue;
            return normalized(rec);
        }
    }
    return std::nullopt;
}

bool DiffOp::polynomial_coeffs() const {
    return std::all_of(coeff.begin(), coeff.end(),
                       [](const RationalFunction& c) { return c.is_polynomial(); });
}

DiffOp diffop_from_polys(std::vector<IntPoly> coeffs) {
    DiffOp op;
    for (auto& p : coeffs) op.coeff.emplace_back(std::move(p));
    while (op.coeff.size() > 1 && op.coeff.back().is_zero()) op.coeff.pop_back();
    return op;
}

DiffOp diffop_mul(const DiffOp& a, const DiffOp& b) {
    // cur = d^i o b, advanced once per i
    std::vector<RationalFunction> cur = b.coeff;
    std::vector<RationalFunction> res;
    for (int i = 0; i <= a.order(); ++i) {
        if (!a.coeff[i].is_zero()) {
            if (res.size() < cur.size()) res.resize(cur.size());
            for (std::size_t j = 0; j < cur.size(); ++j) res[j] = res[j] + a.coeff[i] * cur[j];
        }
        if (i < a.order()) {
            std::vector<RationalFunction> nxt(cur.size() + 1);
            for (std::size_t j = 0; j < cur.size(); ++j) {
                nxt[j] = nxt[j] + cur[j].derivative();
                nxt[j + 1] = nxt[j + 1] + cur[j];
            }
            cur = std::move(nxt);
        }
    }
    while (res.size() > 1 && res.back().is_zero()) res.pop_back();
    DiffOp out;
    out.coeff = std::move(res);
    return out;
}

series::PowerSeries diffop_apply(const DiffOp& a, const series::PowerSeries& g) {
    using namespace series;
    const int m = a.order();
    if (g.order() < m) throw std::invalid_argument("series order below operator order");
    const int out_order = g.order() - m;
    PowerSeries res(out_order);
    PowerSeries gi = g;  // i-th derivative of g
    for (int i = 0; i <= m; ++i) {
        if (i > 0) gi = ps_derivative(gi);
        if (!a.coeff[i].is_zero()) {
            if (a.coeff[i].den().coeff(0) == 0)
                throw std::domain_error(
                    "operator coefficient has a pole at t = 0; clear denominators first");
            const PowerSeries ci = rf_to_series(a.coeff[i], out_order);
            res = ps_add(res, ps_mul(ci, gi.truncated(out_order)));
        }
    }
    return res;
}

DiffOp diffop_clear_denominators(const DiffOp& a) {
    IntPoly l = IntPoly::constant(1);
    for (const auto& c : a.coeff) {
        const IntPoly g = poly_gcd(l, c.den());
        l = poly_div_exact(l * c.den(), g);
    }
    DiffOp out;
    for (const auto& c : a.coeff) {
        const RationalFunction cleared = c * RationalFunction(l);
        if (!cleared.is_polynomial())
            throw std::domain_error("failed to clear denominators");  // unreachable for reduced input
        out.coeff.emplace_back(cleared.num().divided_by(cleared.den().leading()));
    }
    return out;
}

PRecurrence ode_to_recurrence(const DiffOp& a) {
    if (!a.polynomial_coeffs())
        throw std::invalid_argument("ode_to_recurrence requires polynomial coefficients");
    // [t^n] t^e d^i g = (n - e + i)(n - e + i - 1)...(n - e + 1) g_{n - e + i},
    // collected by shift k = i - e.
    std::map<int, IntPoly> by_shift;
    for (int i = 0; i <= a.order(); ++i) {
        const IntPoly& ci = a.coeff[i].num();
        for (int e = 0; e <= ci.degree(); ++e) {
            const BigInt c = ci.coeff(e);
            if (c == 0) continue;
            IntPoly ff = IntPoly::constant(c);
            for (int l = 0; l < i; ++l) ff *= IntPoly({i - e - l, 1});  // (n + i - e - l)
            by_shift[i - e] += ff;
        }
    }
    while (!by_shift.empty() && by_shift.begin()->second.is_zero()) by_shift.erase(by_shift.begin());
    while (!by_shift.empty() && by_shift.rbegin()->second.is_zero())
        by_shift.erase(std::prev(by_shift.end()));
    if (by_shift.empty()) throw std::domain_error("zero operator");
    const int kmin = by_shift.begin()->first;
    const int kmax = by_shift.rbegin()->first;
    PRecurrence rec;
    for (int j = 0; j <= kmax - kmin; ++j) {
        auto it = by_shift.find(kmin + j);
        rec.coeff.push_back(it == by_shift.end() ? IntPoly{} : it->second.shifted(-kmin));
    }
    return normalized(rec);
}

std::optional<ShiftOp> shift_right_divide(const PRecurrence& r2, const PRecurrence& r1) {
    require_valid(r2);
    require_valid(r1);
    if (r2.order() < r1.order()) return std::nullopt;
    std::vector<RationalFunction> rem;
    for (const auto& p : r2.coeff) rem.emplace_back(p);
    const int d1 = r1.order();
    ShiftOp q;
    q.coeff.assign(r2.order() - d1 + 1, RationalFunction{});
    auto top = [&rem]() {
        int t = static_cast<int>(rem.size()) - 1;
        while (t >= 0 && rem[t].is_zero()) --t;
        return t;
    };
    for (int t = top(); t >= d1; t = top()) {
        const int k = t - d1;
        // S^k p(n) = p(n+k) S^k
        const RationalFunction f = rem[t] / RationalFunction(r1.coeff[d1].shifted(k));
        q.coeff[k] = f;
        for (int j = 0; j <= d1; ++j)
            rem[k + j] = rem[k + j] - f * RationalFunction(r1.coeff[j].shifted(k));
    }
    for (const auto& r : rem)
        if (!r.is_zero()) return std::nullopt;
    return q;
}

}  // namespace tensorwalk::holonomic
