#pragma once

#include "tensorwalk/bigint.hpp"
#include "tensorwalk/intpoly.hpp"

#include <vector>

namespace tensorwalk::series {

/// Truncated formal power series over exact rationals. A series of order N
/// stores coefficients of t^0..t^N; every arithmetic result is exact up to
/// its stated order.
class PowerSeries {
public:
    PowerSeries() : c_(1) {}
    explicit PowerSeries(int order) : c_(order + 1) {}
    explicit PowerSeries(std::vector<BigRational> coeffs);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigRational>& coeffs() const { return c_; }
    const BigRational& operator[](int i) const { return c_[i]; }
    BigRational& operator[](int i) { return c_[i]; }

    /// Index of the first nonzero coefficient; order()+1 if all stored
    /// coefficients vanish.
    int valuation() const;

    PowerSeries truncated(int order) const;
    bool operator==(const PowerSeries&) const = default;

private:
    std::vector<BigRational> c_;
};

PowerSeries from_sequence(const Sequence& a);
PowerSeries from_poly(const IntPoly& p, int order);

// Arithmetic requires equal truncation orders; combine with truncated() as
// needed. Division requires b(0) != 0.
PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_div(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_scale(const PowerSeries& a, const BigRational& c);

/// outer(inner) for inner with zero constant term.
PowerSeries ps_compose(const PowerSeries& outer, const PowerSeries& inner);

/// a^e for a with constant term 1 (binomial series).
PowerSeries ps_rational_power(const PowerSeries& a, const BigRational& e);

/// Antiderivative with zero constant term; order grows by one.
PowerSeries ps_integrate(const PowerSeries& a);

/// Derivative; order drops by one.
PowerSeries ps_derivative(const PowerSeries& a);

/// Gauss hypergeometric series 2F1(a,b;c;inner) for inner of valuation >= 1;
/// c must not be a nonpositive integer.
PowerSeries hypergeom_2f1(const BigRational& a, const BigRational& b, const BigRational& c,
                          const PowerSeries& inner);

/// Expansion of num/den to the given order; requires den(0) != 0.
PowerSeries rf_to_series(const IntPoly& num, const IntPoly& den, int order);
PowerSeries rf_to_series(const RationalFunction& f, int order);

/// Divides by t^k; the first k coefficients must vanish.
PowerSeries shift_down(const PowerSeries& a, int k);

}  // namespace tensorwalk::series
