// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#include "polydisc/json_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json_util.hpp"
#include "polydisc/error.hpp"

namespace polydisc::io {

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::Parse, where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) schema_error(where, std::string("missing \"") + key + "\"");
  return *it;
}

long long integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) schema_error(where, "expected an integer");
  return j.get<long long>();
}

std::size_t count(const json& j, const std::string& where) {
  const long long v = integer(j, where);
  if (v < 0) schema_error(where, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

std::vector<cplx> complex_list(const json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array");
  std::vector<cplx> out;
  for (std::size_t k = 0; k < j.size(); ++k)
    out.push_back(complex_from_json(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

}  // namespace

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    int line = 1;
    int column = 1;
    for (std::size_t k = 0; k < upto; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::Parse,
                "line " + std::to_string(line) + ", column " + std::to_string(column) +
                    ": " + e.what(),
                {.i = line - 1, .j = column - 1});
  }
}

cplx complex_from_json(const json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  schema_error(where, "expected [re, im]");
}

CMatrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) schema_error(where, "expected a nonempty array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  std::vector<cplx> data;
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_at = where + "[" + std::to_string(r) + "]";
    const std::vector<cplx> row = complex_list(j[r], row_at);
    if (r == 0) cols = row.size();
    if (row.size() != cols || cols == 0) schema_error(row_at, "ragged or empty row");
    data.insert(data.end(), row.begin(), row.end());
  }
  return CMatrix(rows, cols, std::move(data));
}

json complex_to_json(cplx z) { return json::array({number(z.real()), number(z.imag())}); }

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

json check_to_json(const Check& c) {
  return {{"name", c.name}, {"value", number(c.value)},
          {"threshold", number(c.threshold)}, {"pass", c.pass}};
}

json checks_to_json(const std::vector<Check>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(check_to_json(c));
  return out;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string check_to_csv(const Check& c) {
  std::string name = c.name;
  if (name.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char ch : name) {
      if (ch == '"') quoted += '"';
      quoted += ch;
    }
    name = quoted + "\"";
  }
  return name + "," + format_double(c.value) + "," + format_double(c.threshold) + "," +
         (c.pass ? "true" : "false");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TupleFile parse_tuple(std::string_view text, const Tolerances& tol) {
  const json j = parse_text(text);
  const std::size_t n = count(field(j, "n", "tuple"), "n");
  const std::size_t dim = count(field(j, "dim", "tuple"), "dim");
  const json& mats = field(j, "matrices", "tuple");
  if (!mats.is_array() || mats.size() != n)
    schema_error("matrices", "expected n = " + std::to_string(n) + " matrices");
  std::vector<CMatrix> ops;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string at = "matrices[" + std::to_string(i) + "]";
    CMatrix m = matrix_from_json(mats[i], at);
    if (m.rows() != dim || m.cols() != dim)
      schema_error(at, "expected a " + std::to_string(dim) + " x " + std::to_string(dim) + " matrix");
    ops.push_back(std::move(m));
  }
  TupleFile out{validate(std::move(ops), tol), std::nullopt};
  if (const auto it = j.find("grading"); it != j.end()) {
    if (!it->is_array() || it->size() != dim)
      schema_error("grading", "expected one multi-degree per coordinate");
    std::vector<std::vector<int>> g;
    for (std::size_t c = 0; c < dim; ++c) {
      const std::string at = "grading[" + std::to_string(c) + "]";
      const json& row = (*it)[c];
      if (!row.is_array() || row.size() != n) schema_error(at, "expected n degrees");
      std::vector<int> deg;
      for (std::size_t i = 0; i < n; ++i) deg.push_back(static_cast<int>(count(row[i], at)));
      g.push_back(std::move(deg));
    }
    out.grading = std::move(g);
  }
  return out;
}

std::string tuple_to_json(const CTuple& t,
                          const std::optional<std::vector<std::vector<int>>>& grading) {
  json j;
  j["n"] = t.n();
  j["dim"] = t.dim();
  json mats = json::array();
  for (const auto& m : t.ops()) mats.push_back(matrix_to_json(m));
  j["matrices"] = std::move(mats);
  if (grading) j["grading"] = *grading;
  return j.dump(2) + "\n";
}

WindowMask window_from_grading(const std::vector<std::vector<int>>& grading, int margin) {
  if (margin < 0) throw Error(ErrorCode::InvalidArgument, "window margin must be >= 0");
  std::vector<int> top;
  for (const auto& g : grading) {
    if (top.empty()) top.assign(g.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) top[i] = std::max(top[i], g[i]);
  }
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < grading.size(); ++c) {
    bool inside = true;
    for (std::size_t i = 0; i < top.size(); ++i) inside = inside && grading[c][i] <= top[i] - margin;
    if (inside) keep.push_back(c);
  }
  return WindowMask::from_subspace(Subspace::coordinates(grading.size(), keep));
}

WindowMask inferred_window(const CTuple& t, int margin) {
  if (margin < 0) throw Error(ErrorCode::InvalidArgument, "window margin must be >= 0");
  if (margin == 0) return WindowMask::full(t.dim());
  Subspace kernels = Subspace::zero(t.dim());
  for (const auto& op : t.ops()) {
    if (op.max_abs() == 0.0) continue;
    CMatrix p = CMatrix::identity(t.dim());
    for (int k = 0; k < margin; ++k) p = p * op;
    // ker p is the complement of the range of p^H.
    kernels = sum(kernels, complement(range_basis(p.adjoint(), t.tol()), t.tol()), t.tol());
  }
  return WindowMask::from_subspace(complement(kernels, t.tol()));
}

namespace {

std::optional<std::size_t> declared_n(const json& j) {
  if (!j.is_object()) return std::nullopt;
  if (const auto it = j.find("n"); it != j.end() && it->is_number_unsigned())
    return it->get<std::size_t>();
  const auto kind = j.find("kind");
  if (kind != j.end() && *kind == "monomial") {
    const auto e = j.find("exponent");
    if (e != j.end() && e->is_array()) return e->size();
  }
  for (const char* key : {"children", "parts", "factors"}) {
    const auto it = j.find(key);
    if (it == j.end() || !it->is_array()) continue;
    for (const auto& c : *it)
      if (auto n = declared_n(c)) return n;
  }
  return std::nullopt;
}

InnerSymbol symbol_from_json(const json& j, std::optional<std::size_t> n,
                             const std::string& where) {
  if (auto own = declared_n(j)) n = own;
  const json& kind_j = field(j, "kind", where);
  if (!kind_j.is_string()) schema_error(where + ".kind", "expected a string");
  const std::string kind = kind_j.get<std::string>();
  auto need_n = [&]() {
    if (!n || *n == 0) schema_error(where, "number of variables \"n\" is required");
    return *n;
  };
  auto children = [&](const char* alt) {
    const json* list = nullptr;
    if (const auto it = j.find("children"); it != j.end()) list = &*it;
    if (!list) {
      if (const auto it = j.find(alt); it != j.end()) list = &*it;
    }
    if (!list || !list->is_array() || list->empty())
      schema_error(where, "expected a nonempty \"children\" list");
    std::vector<InnerSymbol> out;
    for (std::size_t k = 0; k < list->size(); ++k)
      out.push_back(symbol_from_json((*list)[k], n, where + ".children[" + std::to_string(k) + "]"));
    return out;
  };

  if (kind == "monomial") {
    const json& e = field(j, "exponent", where);
    if (!e.is_array() || e.empty()) schema_error(where + ".exponent", "expected a nonempty array");
    std::vector<int> exp;
    for (const auto& v : e) exp.push_back(static_cast<int>(count(v, where + ".exponent")));
    if (n && *n != exp.size()) schema_error(where, "exponent length differs from n");
    return InnerSymbol::monomial(std::move(exp));
  }
  if (kind == "blaschke1") {
    const std::size_t var = count(field(j, "var", where), where + ".var");
    return InnerSymbol::blaschke1(need_n(), var, complex_list(field(j, "zeros", where), where + ".zeros"));
  }
  if (kind == "unitary") {
    return InnerSymbol::unitary(need_n(), matrix_from_json(field(j, "matrix", where), where + ".matrix"));
  }
  if (kind == "blockdiag") return InnerSymbol::block_diag(children("parts"));
  if (kind == "product") return InnerSymbol::product(children("factors"));
  schema_error(where + ".kind", "unknown kind \"" + kind + "\"");
}

}  // namespace

InnerSymbol parse_symbol(std::string_view text) {
  const json j = parse_text(text);
  return symbol_from_json(j, declared_n(j), "symbol");
}

EvalRequest parse_eval_request(std::string_view text) {
  const json j = parse_text(text);
  if (!j.is_object()) schema_error("request", "expected an object");
  EvalRequest out;
  if (const auto it = j.find("points"); it != j.end()) {
    if (!it->is_array()) schema_error("points", "expected an array of points");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string at = "points[" + std::to_string(k) + "]";
      Point p = complex_list((*it)[k], at);
      if (p.empty()) schema_error(at, "empty point");
      if (!out.points.empty() && p.size() != out.points.front().size())
        schema_error(at, "points differ in length");
      out.points.push_back(std::move(p));
    }
  }
  if (const auto it = j.find("grid"); it != j.end()) {
    const long long g = integer(field(*it, "per_axis", "grid"), "grid.per_axis");
    if (g < 1) schema_error("grid.per_axis", "expected a positive integer");
    out.per_axis = static_cast<int>(g);
  }
  return out;
}

UnitarySpec parse_unitary(std::string_view text) {
  const json j = parse_text(text);
  UnitarySpec out;
  if (j.is_array()) {
    out.matrix = matrix_from_json(j, "unitary");
    return out;
  }
  if (!j.is_object()) schema_error("unitary", "expected an object or a matrix");
  if (const auto it = j.find("matrix"); it != j.end()) {
    out.matrix = matrix_from_json(*it, "unitary.matrix");
    return out;
  }
  if (const auto it = j.find("random"); it != j.end() && it->is_boolean() && it->get<bool>()) {
    out.random_dim = count(field(j, "dim", "unitary"), "unitary.dim");
    return out;
  }
  schema_error("unitary", "expected \"matrix\" or \"random\": true with \"dim\"");
}

}  // namespace polydisc::io
