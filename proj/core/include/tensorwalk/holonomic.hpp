#pragma once

#include "tensorwalk/bigint.hpp"
#include "tensorwalk/intpoly.hpp"
#include "tensorwalk/powerseries.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tensorwalk::holonomic {

/// Linear recurrence sum_{j=0..r} p_j(n) a(n+j) = 0 with integer polynomial
/// coefficients; the leading polynomial p_r is not identically zero.
struct PRecurrence {
    std::vector<IntPoly> coeff;  // p_0 .. p_r

    int order() const { return static_cast<int>(coeff.size()) - 1; }
    bool operator==(const PRecurrence&) const = default;
};

/// Divides by the integer content and fixes the sign so the leading
/// polynomial has a positive leading coefficient.
PRecurrence normalized(const PRecurrence& rec);

/// Extends `initial` (length >= order) to n_max using the recurrence.
/// Integer-exact: throws on a vanishing leading coefficient or an inexact
/// division.
Sequence unroll(const PRecurrence& rec, const Sequence& initial, int n_max);

/// Unroll over the rationals (used for parameterized recurrences whose
/// integrality is not known in advance).
std::vector<BigRational> unroll_rational(const PRecurrence& rec, const Sequence& initial, int n_max);

/// First n with sum_j p_j(n) a(n+j) != 0, or nullopt when every applicable
/// instance holds.
std::optional<int> check_recurrence(const PRecurrence& rec, const Sequence& a);

/// Minimal (order, then degree) recurrence satisfied by every given term,
/// requiring at least `surplus` more equations than unknowns. Exact rational
/// nullspace via fraction-free (Bareiss) elimination. Returns nullopt when no
/// recurrence exists within the bounds; throws when the data cannot support
/// the search at all.
std::optional<PRecurrence> guess_recurrence(const Sequence& a, int max_order, int max_degree,
                                            int surplus = 10);

/// Linear differential operator sum_{i=0..m} c_i(t) d^i with rational-function
/// coefficients; c_m is nonzero.
struct DiffOp {
    std::vector<RationalFunction> coeff;  // c_0 .. c_m

    int order() const { return static_cast<int>(coeff.size()) - 1; }
    bool polynomial_coeffs() const;
    bool operator==(const DiffOp&) const = default;
};

DiffOp diffop_from_polys(std::vector<IntPoly> coeffs);

/// Noncommutative product, using d(f g) = f dg + f' g.
DiffOp diffop_mul(const DiffOp& a, const DiffOp& b);

/// A applied to a truncated series; result order = g.order() - A.order().
/// Requires every coefficient denominator nonzero at t = 0.
series::PowerSeries diffop_apply(const DiffOp& a, const series::PowerSeries& g);

/// Left-multiplies by the lcm of the coefficient denominators, making every
/// coefficient polynomial (same solution space).
DiffOp diffop_clear_denominators(const DiffOp& a);

/// The recurrence satisfied by coefficient sequences of series solutions of
/// a polynomial-coefficient operator, content-normalized.
PRecurrence ode_to_recurrence(const DiffOp& a);

/// Shift operator sum_j q_j(n) S^j with rational-function coefficients.
struct ShiftOp {
    std::vector<RationalFunction> coeff;  // q_0 .. q_m
    int order() const { return static_cast<int>(coeff.size()) - 1; }
    bool operator==(const ShiftOp&) const = default;
};

/// Right division in the shift algebra over Q(n): M with r2 = M * r1, or
/// nullopt when r1 does not right-divide r2.
std::optional<ShiftOp> shift_right_divide(const PRecurrence& r2, const PRecurrence& r1);

/// True when a and b agree after content/sign normalization.
bool same_recurrence(const PRecurrence& a, const PRecurrence& b);

}  // namespace tensorwalk::holonomic
