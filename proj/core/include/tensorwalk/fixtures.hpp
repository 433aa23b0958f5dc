#pragma once

#include "tensorwalk/holonomic.hpp"

#include <string>
#include <variant>
#include <vector>

namespace tensorwalk::fixtures {

/// Recurrences shipped with the library.
///   t3_rec        order 3, annihilates T3 (A059710)
///   e3_rec        order 2, annihilates E3 (A108307)
///   s3_rec        order 2, annihilates S3 (A216947)
///   quadrant_rec  order 4 with parameter k, annihilates S_k for k = 0..3
holonomic::PRecurrence paper_recurrence(const std::string& name, int k = 0);

/// Differential operators shipped with the library.
///   L6, Q, L3, L2, L1 : the operator tower for the T3 generating function
///                       (L6 = Q*L3, L3 = L2*L1)
///   P, P1, P2         : order-0 multiplication operators used inside L2/L1
///   e3_ode            : order 2; applied to the E3 series it yields the
///                       constant 30 (inhomogeneous equation L(E) - 30 = 0)
///   s3_ode            : order 4, annihilates the S3 series
holonomic::DiffOp paper_diffop(const std::string& name);

/// Either kind by name; "quadrant_rec" takes k.
std::variant<holonomic::PRecurrence, holonomic::DiffOp> paper_operator(const std::string& name,
                                                                       int k = 0);

std::vector<std::string> paper_operator_names();

// Reference rows (exact published prefixes; the regression suite recomputes
// every one of them with at least two engines).
const Sequence& fig1_row(int i);         // i = 0: T3, 1: E3, 2: third octant row (10 terms)
const Sequence& fig2_row(int k);         // k = 0..3: S_k (9 terms)
const Sequence& a108304_prefix();        // 3-noncrossing partition counts of [n], n = 0..10
Sequence catalan_prefix(int n_max);      // C_0..C_{n_max}
Sequence catalan3d_prefix(int n_max);    // 2(3n)!/(n!(n+1)!(n+2)!)
Sequence c2_spin_prefix(int n_max);      // C_n C_{n+2} - C_{n+1}^2

}  // namespace tensorwalk::fixtures
