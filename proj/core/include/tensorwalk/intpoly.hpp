#pragma once

#include "tensorwalk/bigint.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace tensorwalk {

/// Dense univariate polynomial over Z, coefficients in ascending degree.
/// The zero polynomial has an empty coefficient vector; otherwise the
/// leading coefficient is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> coeffs);
    explicit IntPoly(std::vector<BigInt> coeffs);
    static IntPoly constant(BigInt c);
    static IntPoly monomial(BigInt c, int degree);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(int i) const;
    const BigInt& leading() const;

    BigInt eval(const BigInt& x) const;
    BigRational eval_rational(const BigRational& x) const;

    IntPoly derivative() const;
    /// p(n + k) by Taylor shift.
    IntPoly shifted(long k) const;

    /// gcd of coefficients, sign matching the leading coefficient; 0 for the zero poly.
    BigInt content() const;
    IntPoly primitive_part() const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
    bool operator==(const IntPoly&) const = default;

    IntPoly multiplied_by(const BigInt& c) const;
    /// Exact division by a scalar; throws on any inexact coefficient.
    IntPoly divided_by(const BigInt& c) const;

    std::string str(std::string_view var = "n") const;

private:
    void normalize();
    std::vector<BigInt> c_;
};

/// Exact polynomial division; throws std::domain_error when b does not divide a.
IntPoly poly_div_exact(const IntPoly& a, const IntPoly& b);
/// Primitive gcd over Z (positive leading coefficient; content stripped).
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// Reduced quotient of integer polynomials. Invariants: denominator nonzero
/// with positive leading coefficient, gcd(num, den) = 1 up to content.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(IntPoly::constant(1)) {}
    RationalFunction(IntPoly num, IntPoly den);
    explicit RationalFunction(IntPoly num) : RationalFunction(std::move(num), IntPoly::constant(1)) {}
    static RationalFunction constant(BigInt c) { return RationalFunction(IntPoly::constant(std::move(c))); }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0 && den_.leading() == 1; }

    RationalFunction derivative() const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;
    bool operator==(const RationalFunction&) const = default;

    std::string str(std::string_view var = "t") const;

private:
    void reduce();
    IntPoly num_, den_;
};

}  // namespace tensorwalk
