// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "polydisc/error.hpp"
#include "polydisc/linalg.hpp"

namespace polydisc::cli {

enum class Format { Json, Csv };

struct RunConfig {
  Tolerances tol;
  std::optional<int> degree;  // truncation or dilation degree
  int grid = 32;              // torus points per axis
  std::uint64_t seed = 42;
  std::optional<int> window;  // window margin; hardy defaults to 1
  Format format = Format::Json;

  // Throws InvalidArgument unless grid >= 4 and window >= 0.
  void validate() const;
};

// Exit codes: 0 success, 1 suite failure, 2 parse or validation error,
// 3 Beurling gate, 4 symbol gate, 5 unitary gate.
inline constexpr int kExitOk = 0;
inline constexpr int kExitSuiteFailure = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitBeurling = 3;
inline constexpr int kExitSymbol = 4;
inline constexpr int kExitUnitary = 5;

int exit_code_for(ErrorCode code);

struct CommandOutput {
  int exit_code = kExitOk;
  std::string report;  // rendered in the configured format
};

CommandOutput cmd_classify(const std::string& tuple_file, const RunConfig& config);
CommandOutput cmd_charfn(const std::string& tuple_file,
                         const std::optional<std::string>& points_file,
                         const RunConfig& config);
CommandOutput cmd_hardy(const std::string& symbol_file, const RunConfig& config);
CommandOutput cmd_dilate(const std::string& tuple_file, const RunConfig& config);
CommandOutput cmd_coincide(const std::string& tuple_file, const std::string& unitary_file,
                           const RunConfig& config);
CommandOutput cmd_suite(const RunConfig& config);

// JSON report with the provenance.timing object removed, for comparisons.
std::string without_timing(const std::string& json_report);

}  // namespace polydisc::cli
