// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polydisc/charfn.hpp"
#include "polydisc/inner_symbol.hpp"
#include "polydisc/tuple.hpp"

namespace polydisc::io {

// Tuple file: {"n", "dim", "matrices": [n arrays of dim rows of [re, im]]}.
// An optional "grading" lists a multi-degree per coordinate.
struct TupleFile {
  CTuple tuple;
  std::optional<std::vector<std::vector<int>>> grading;
};

// Parse failures throw Error(Parse) with 1-based line and column in the
// payload; validation failures pass through from validate().
TupleFile parse_tuple(std::string_view text, const Tolerances& tol = {});
std::string tuple_to_json(const CTuple& t,
                          const std::optional<std::vector<std::vector<int>>>& grading = {});

// Coordinates whose every degree is at most (max degree - margin).
WindowMask window_from_grading(const std::vector<std::vector<int>>& grading,
                               int margin);
// Orthocomplement of the sum of ker T_i^margin over the nonzero T_i.
WindowMask inferred_window(const CTuple& t, int margin);

// {"kind": "monomial" | "blaschke1" | "unitary" | "blockdiag" | "product", ...}
InnerSymbol parse_symbol(std::string_view text);

// {"points": [[[re, im], ...], ...], "grid": {"per_axis": int}}
struct EvalRequest {
  std::vector<Point> points;
  std::optional<int> per_axis;
};
EvalRequest parse_eval_request(std::string_view text);

// {"matrix": [[[re, im], ...], ...]} or {"random": true, "dim": d}.
struct UnitarySpec {
  std::optional<CMatrix> matrix;
  std::optional<std::size_t> random_dim;  // set when "random" is true
};
UnitarySpec parse_unitary(std::string_view text);

// Whole file as a string; throws Error(Parse) if unreadable.
std::string read_file(const std::string& path);

}  // namespace polydisc::io
