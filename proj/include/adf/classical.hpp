#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adf/digraph.hpp"

namespace adf {

struct ConditionResult {
  std::string name;
  bool met = false;
  std::string guarantee;
};

struct ClassicalReport {
  int n = 0;
  int delta = 0;
  std::vector<ConditionResult> conditions;
};

// Sufficient degree conditions met by d; arithmetic on n and degrees only.
ClassicalReport classical_conditions(const Digraph& d);

// Name of a published degree condition guaranteeing an anti-directed
// Hamilton cycle (hamilton) or 2-factor for a digraph of order n and
// min_degree delta, if one applies.
std::optional<std::string> degree_guarantee(int n, int delta, bool hamilton);

}  // namespace adf
