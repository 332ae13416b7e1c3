// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace polydisc {

enum class ErrorCode {
  NotHermitian,
  NotSquare,
  NotPsd,
  ShapeMismatch,
  NotCommuting,
  NotContraction,
  NotSzego,
  NotPure,
  BadIndex,
  NearSingularGram,
  DimensionOverflow,
  IncompatibleDims,
  SingularResolvent,
  NotBeurling,
  NotUnitary,
  NotInner,
  NotAvailable,
  Parse,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

// Indices are zero-based; the message prints them one-based.
struct ErrorInfo {
  int i = -1;
  int j = -1;
  double value = std::numeric_limits<double>::quiet_NaN();
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail, ErrorInfo info = {});

  ErrorCode code() const noexcept { return code_; }
  const ErrorInfo& info() const noexcept { return info_; }

 private:
  ErrorCode code_;
  ErrorInfo info_;
};

}  // namespace polydisc
