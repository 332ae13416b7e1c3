// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "polydisc/check.hpp"
#include "polydisc/cmatrix.hpp"

namespace polydisc::io {

using nlohmann::json;

// Parses text, mapping syntax errors to Error(Parse) with line and column.
json parse_text(std::string_view text);

cplx complex_from_json(const json& j, const std::string& where);
CMatrix matrix_from_json(const json& j, const std::string& where);

json complex_to_json(cplx z);
json matrix_to_json(const CMatrix& m);

// Finite values as numbers, others as the strings "inf", "-inf", "nan".
json number(double v);
json check_to_json(const Check& c);
json checks_to_json(const std::vector<Check>& cs);

// Same check fields as one CSV line (no trailing newline).
std::string check_to_csv(const Check& c);
std::string format_double(double v);

}  // namespace polydisc::io
