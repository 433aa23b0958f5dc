#pragma once

#include "tensorwalk/bigint.hpp"

#include <string>
#include <vector>

namespace tensorwalk::sequences {

/// Terms 0..n_max of a named sequence. Registry names: T3, E3, NC3, S0..S3,
/// catalan, catalan3d, c2spin; OEIS tags (A059710, A108307, A108304, A151366,
/// A236408, A001181, A216947) are accepted as aliases. Each name is backed by
/// its fastest engine (recurrence unroll, binomial transform, or a product
/// formula); the regression suite recomputes all of them with independent
/// engines.
Sequence named_sequence(const std::string& name, int n_max);

std::vector<std::string> sequence_names();

/// Resolves an alias to its canonical registry name; throws for unknown names.
std::string canonical_sequence_name(const std::string& name);

}  // namespace tensorwalk::sequences
