// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polydisc/check.hpp"
#include "polydisc/linalg.hpp"

namespace polydisc {

struct SuiteConfig {
  Tolerances tol;
  std::uint64_t seed = 42;
  std::vector<int> only;  // criterion ids to run; empty runs all
};

struct CriterionResult {
  int id = 0;
  std::string name;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, double>> metrics;
  std::string error;      // set when the run threw
  double seconds = 0.0;   // wall time, not part of the deterministic report
  double budget_seconds = 0.0;  // 0 when unbounded
  bool pass = false;
};

struct SuiteReport {
  std::vector<CriterionResult> criteria;
  bool all_pass = false;
};

inline constexpr int kSuiteCriteria = 11;

// Independent stream for each criterion, derived from the master seed.
std::uint64_t criterion_seed(std::uint64_t master, int id);

CriterionResult run_criterion(int id, const SuiteConfig& config);
SuiteReport run_suite(const SuiteConfig& config);

}  // namespace polydisc
