// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace polydisc {

// One line of a report: pass iff value is finite and <= threshold.
struct Check {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

inline Check make_check(std::string name, double value, double threshold) {
  const bool ok = std::isfinite(value) && value <= threshold;
  return {std::move(name), value, threshold, ok};
}

// Lower-bound variant: pass iff value >= threshold.
inline Check make_floor_check(std::string name, double value, double threshold) {
  const bool ok = !std::isnan(value) && value >= threshold;
  return {std::move(name), value, threshold, ok};
}

inline bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace polydisc
