#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace planeflow {

// All capacities and flow values are exact nonnegative rationals; results of
// interval arithmetic may be negative. No floating point anywhere in the
// algorithmic path.
using Rat = mpq_class;

// Parses "p/q" or "p" with optional leading '-'. Returns nullopt on malformed
// input or zero denominator.
std::optional<Rat> parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rat& value);

inline const Rat& rat_min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

} // namespace planeflow
