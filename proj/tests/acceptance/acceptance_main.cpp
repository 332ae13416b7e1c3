// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

// Acceptance battery: one line per criterion, nonzero exit if any fails.

#include <cstdio>
#include <string>

#include "polydisc/commands.hpp"
#include "polydisc/suite.hpp"

namespace {

void print_line(bool pass, int id, const std::string& name, const std::string& detail) {
  std::printf("[%s] %2d %-22s %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
}

std::string worst_check(const polydisc::CriterionResult& r) {
  if (!r.error.empty()) return "error: " + r.error;
  std::string out;
  for (const auto& c : r.checks) {
    if (c.pass) continue;
    char buf[160];
    std::snprintf(buf, sizeof buf, " %s=%.3g (limit %.3g)", c.name.c_str(), c.value,
                  c.threshold);
    out += buf;
  }
  return out;
}

}  // namespace

int main() {
  polydisc::SuiteConfig config;
  config.seed = 42;
  int failures = 0;

  for (int id = 1; id <= polydisc::kSuiteCriteria; ++id) {
    const polydisc::CriterionResult r = polydisc::run_criterion(id, config);
    const bool in_budget = r.budget_seconds <= 0.0 || r.seconds <= r.budget_seconds;
    const bool pass = r.pass && in_budget;
    char timing[96];
    if (r.budget_seconds > 0.0) {
      std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", r.seconds, r.budget_seconds);
    } else {
      std::snprintf(timing, sizeof timing, "%.2f s", r.seconds);
    }
    std::string detail = timing;
    if (!r.pass) detail += worst_check(r);
    if (!in_budget) detail += " over budget";
    print_line(pass, id, r.name, detail);
    if (!pass) ++failures;
  }

  // CLI determinism: two suite runs agree outside the timing block.
  polydisc::cli::RunConfig cli_config;
  cli_config.seed = 42;
  const auto a = polydisc::cli::cmd_suite(cli_config);
  const auto b = polydisc::cli::cmd_suite(cli_config);
  const bool same = polydisc::cli::without_timing(a.report) ==
                    polydisc::cli::without_timing(b.report);
  const bool zero = a.exit_code == 0 && b.exit_code == 0;
  std::string detail = same ? "reports identical" : "reports differ";
  detail += ", exit codes " + std::to_string(a.exit_code) + "/" + std::to_string(b.exit_code);
  print_line(same && zero, 12, "cli_determinism", detail);
  if (!(same && zero)) ++failures;

  std::printf("%d of %d criteria passed\n", polydisc::kSuiteCriteria + 1 - failures,
              polydisc::kSuiteCriteria + 1);
  return failures == 0 ? 0 : 1;
}
