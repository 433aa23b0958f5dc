#include "tensorwalk/powerseries.hpp"

#include <stdexcept>

namespace tensorwalk::series {

PowerSeries::PowerSeries(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("a power series needs at least the constant coefficient");
}

int PowerSeries::valuation() const {
    for (int i = 0; i <= order(); ++i)
        if (c_[i] != 0) return i;
    return order() + 1;
}

PowerSeries PowerSeries::truncated(int order) const {
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    PowerSeries r(order);
    for (int i = 0; i <= std::min(order, this->order()); ++i) r[i] = c_[i];
    return r;
}

PowerSeries from_sequence(const Sequence& a) {
    if (a.empty()) throw std::invalid_argument("empty sequence");
    PowerSeries r(static_cast<int>(a.size()) - 1);
    for (std::size_t i = 0; i < a.size(); ++i) r[static_cast<int>(i)] = BigRational(a[i]);
    return r;
}

PowerSeries from_poly(const IntPoly& p, int order) {
    PowerSeries r(order);
    for (int i = 0; i <= std::min(order, p.degree()); ++i) r[i] = BigRational(p.coeff(i));
    return r;
}

namespace {
void require_same_order(const PowerSeries& a, const PowerSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("power series truncation orders differ");
}
}  // namespace

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    PowerSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) r[i] = a[i] + b[i];
    return r;
}

PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    PowerSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) r[i] = a[i] - b[i];
    return r;
}

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    const int n = a.order();
    PowerSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j + i <= n; ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

PowerSeries ps_div(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    if (b[0] == 0) throw std::domain_error("division by a power series with zero constant term");
    const int n = a.order();
    PowerSeries q(n);
    for (int i = 0; i <= n; ++i) {
        BigRational acc = a[i];
        for (int k = 1; k <= i; ++k) acc -= b[k] * q[i - k];
        q[i] = acc / b[0];
    }
    return q;
}

PowerSeries ps_scale(const PowerSeries& a, const BigRational& c) {
    PowerSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) r[i] = a[i] * c;
    return r;
}

PowerSeries ps_compose(const PowerSeries& outer, const PowerSeries& inner) {
    if (inner[0] != 0) throw std::domain_error("composition requires inner constant term 0");
    const int n = inner.order();
    PowerSeries r(n);
    for (int i = outer.order(); i >= 0; --i) {  // Horner
        r = ps_mul(r, inner);
        r[0] += outer[i];
    }
    return r;
}

PowerSeries ps_rational_power(const PowerSeries& a, const BigRational& e) {
    if (a[0] != 1) throw std::domain_error("rational power requires constant term 1");
    const int n = a.order();
    PowerSeries u = a;
    u[0] = 0;
    PowerSeries binom(n);
    BigRational c = 1;
    binom[0] = 1;
    for (int i = 1; i <= n; ++i) {
        c = c * (e - (i - 1)) / i;
        binom[i] = c;
    }
    return ps_compose(binom, u);
}

PowerSeries ps_integrate(const PowerSeries& a) {
    PowerSeries r(a.order() + 1);
    for (int i = 0; i <= a.order(); ++i) r[i + 1] = a[i] / (i + 1);
    return r;
}

PowerSeries ps_derivative(const PowerSeries& a) {
    if (a.order() == 0) return PowerSeries(std::vector<BigRational>{BigRational(0)});
    PowerSeries r(a.order() - 1);
    for (int i = 1; i <= a.order(); ++i) r[i - 1] = a[i] * i;
    return r;
}

PowerSeries hypergeom_2f1(const BigRational& a, const BigRational& b, const BigRational& c,
                          const PowerSeries& inner) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(c) == 1 && numerator(c) <= 0)
        throw std::invalid_argument("2F1 lower parameter must not be a nonpositive integer");
    if (inner[0] != 0) throw std::domain_error("2F1 argument must have zero constant term");
    const int n = inner.order();
    const int val = std::max(inner.valuation(), 1);
    const int terms = n / val + 1;
    PowerSeries coeffs(terms);
    BigRational cur = 1;
    for (int m = 0; m <= terms; ++m) {
        coeffs[m] = cur;
        cur = cur * (a + m) * (b + m) / ((c + m) * (m + 1));
    }
    return ps_compose(coeffs, inner);
}

PowerSeries rf_to_series(const IntPoly& num, const IntPoly& den, int order) {
    if (den.coeff(0) == 0) throw std::domain_error("denominator vanishes at t = 0");
    return ps_div(from_poly(num, order), from_poly(den, order));
}

PowerSeries rf_to_series(const RationalFunction& f, int order) {
    return rf_to_series(f.num(), f.den(), order);
}

PowerSeries shift_down(const PowerSeries& a, int k) {
    if (a.valuation() < k) throw std::domain_error("series valuation below requested shift");
    PowerSeries r(a.order() - k);
    for (int i = 0; i <= r.order(); ++i) r[i] = a[i + k];
    return r;
}

}  // namespace tensorwalk::series
