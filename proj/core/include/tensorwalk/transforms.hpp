#pragma once

#include "tensorwalk/bigint.hpp"
#include "tensorwalk/powerseries.hpp"

namespace tensorwalk::transforms {

/// k-th power of the binomial transform:
///   (B^k a)(n) = sum_{i=0..n} k^{n-i} binom(n,i) a(i),  k in Z.
/// k = 1 is the transform itself, k = -1 its inverse, k = 0 the identity.
Sequence bt_power(const Sequence& a, long k);

/// Same operator on generating functions: (1/(1-kt)) * G(t/(1-kt)),
/// truncated at the order of g.
series::PowerSeries bt_series(const series::PowerSeries& g, long k);

}  // namespace tensorwalk::transforms
