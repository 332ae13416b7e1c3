// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#include "polydisc/error.hpp"

#include <cmath>
#include <sstream>

namespace polydisc {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotPsd: return "NotPSD";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::NotContraction: return "NotContraction";
    case ErrorCode::NotSzego: return "NotSzego";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::NearSingularGram: return "NearSingularGram";
    case ErrorCode::DimensionOverflow: return "DimensionOverflow";
    case ErrorCode::IncompatibleDims: return "IncompatibleDims";
    case ErrorCode::SingularResolvent: return "SingularResolvent";
    case ErrorCode::NotBeurling: return "NotBeurling";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotInner: return "NotInner";
    case ErrorCode::NotAvailable: return "NotAvailable";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string format(ErrorCode code, const std::string& detail,
                   const ErrorInfo& info) {
  std::ostringstream out;
  out << error_code_name(code);
  const bool has_i = info.i >= 0;
  const bool has_j = info.j >= 0;
  const bool has_v = !std::isnan(info.value);
  if (has_i || has_j || has_v) {
    out << '(';
    bool first = true;
    auto sep = [&] {
      if (!first) out << ',';
      first = false;
    };
    if (has_i) { sep(); out << info.i + 1; }
    if (has_j) { sep(); out << info.j + 1; }
    if (has_v) { sep(); out << info.value; }
    out << ')';
  }
  if (!detail.empty()) out << ": " << detail;
  return out.str();
}

}  // namespace

Error::Error(ErrorCode code, const std::string& detail, ErrorInfo info)
    : std::runtime_error(format(code, detail, info)), code_(code), info_(info) {}

}  // namespace polydisc
