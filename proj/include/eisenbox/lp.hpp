#pragma once

#include <optional>
#include <vector>

#include "eisenbox/exactnum.hpp"

namespace eisenbox {

/// A point x >= 0 with A x = b, or nullopt when none exists. Exact phase-1
/// simplex over Q with Bland's rule.
std::optional<std::vector<Rational>> lp_feasible(const std::vector<std::vector<Rational>>& a,
                                                 const std::vector<Rational>& b);

}  // namespace eisenbox
