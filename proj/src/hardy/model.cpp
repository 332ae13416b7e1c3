// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#include <algorithm>

#include "polydisc/error.hpp"
#include "polydisc/quotient_model.hpp"

namespace polydisc {

CMatrix symbol_matrix(const HardySpace& in, const HardySpace& out,
                      const SymbolCoefficients& c) {
  if (in.n() != out.n()) throw Error(ErrorCode::IncompatibleDims, "symbol matrix");
  CMatrix m(out.dim(), in.dim());
  MultiIndex target(in.n());
  for (std::size_t a = 0; a < in.monomial_count(); ++a) {
    const MultiIndex& src = in.monomial(a);
    for (const auto& [k, coeff] : c.terms) {
      if (coeff.rows() != out.coeff_dim() || coeff.cols() != in.coeff_dim()) {
        throw Error(ErrorCode::ShapeMismatch, "coefficient block shape");
      }
      for (std::size_t i = 0; i < in.n(); ++i) target[i] = src[i] + k[i];
      const auto b = out.monomial_index(target);
      if (!b) continue;
      for (std::size_t r = 0; r < out.coeff_dim(); ++r)
        for (std::size_t s = 0; s < in.coeff_dim(); ++s)
          m(out.position(*b, r), in.position(a, s)) += coeff(r, s);
    }
  }
  return m;
}

namespace {

int max_of(const std::vector<int>& v) {
  return v.empty() ? 0 : *std::max_element(v.begin(), v.end());
}

// Exact S cap H_N for a polynomial symbol: the image of every input of
// degree <= N, computed without truncation, intersected with H_N.
Subspace polynomial_submodule(const HardySpace& out, const HardySpace& in,
                              const InnerSymbol& theta, int reach,
                              const Tolerances& tol) {
  const HardySpace big = out.with_degree(out.degree() + reach);
  const CMatrix m = symbol_matrix(in, big, theta.coefficients(big.degree()));
  std::vector<std::size_t> outside;
  for (std::size_t a = 0; a < big.monomial_count(); ++a) {
    const auto& k = big.monomial(a);
    if (std::any_of(k.begin(), k.end(), [&](int e) { return e > out.degree(); }))
      for (std::size_t r = 0; r < big.coeff_dim(); ++r)
        outside.push_back(big.position(a, r));
  }
  CMatrix kernel;
  if (outside.empty()) {
    kernel = CMatrix::identity(in.dim());
  } else {
    const CMatrix a = m.rows_subset(outside);
    const HermEig e = herm_eig(hermitian_part(adj_mul(a, a)), tol);
    std::vector<std::size_t> keep;
    for (std::size_t k = e.values.size(); k-- > 0;)
      if (e.values[k] <= tol.rank) keep.push_back(k);
    kernel = e.vectors.cols_subset(keep);
  }
  const CMatrix restrict = adj_mul(inclusion(out, big), m * kernel);
  return span(restrict, tol);
}

}  // namespace

QuotientModel quotient_model_from_submodule(const HardySpace& space,
                                            const Subspace& submodule,
                                            int window_degree,
                                            const Tolerances& tol) {
  if (submodule.ambient != space.dim()) {
    throw Error(ErrorCode::IncompatibleDims, "submodule lives elsewhere");
  }
  QuotientModel m{space, std::nullopt, submodule, complement(submodule, tol),
                  {}, {}, window_degree, {}, {}, false, 0, 0.0, tol};
  const CMatrix& b = m.quotient.basis;
  for (std::size_t i = 0; i < space.n(); ++i) {
    m.shifts.push_back(shift_matrix(space, i));
    m.model_ops.push_back(adj_mul(b, m.shifts.back() * b));
  }
  m.window = degree_window(space, window_degree);
  const Subspace qw = intersect(m.quotient, m.window, tol);
  m.quotient_window = {m.quotient.dim(), adj_mul(b, qw.basis)};
  return m;
}

QuotientModel quotient_model(int degree, const InnerSymbol& theta,
                             const Tolerances& tol) {
  const std::size_t n = theta.n();
  const HardySpace out(n, degree, theta.output_dim());
  const HardySpace in(n, degree, theta.input_dim());
  const SymbolCoefficients c = theta.coefficients(degree);

  if (c.polynomial) {
    const int reach = max_of(c.degree);
    QuotientModel m = quotient_model_from_submodule(
        out, polynomial_submodule(out, in, theta, reach, tol), degree - reach, tol);
    m.symbol = theta;
    m.exact = true;
    m.reach = reach;
    return m;
  }

  int reach = degree;
  double tail = c.tail_bound;
  for (int k = 0; k <= degree; ++k) {
    const double t = theta.coefficients(k).tail_bound;
    if (t <= tol.structural) {
      reach = k;
      tail = t;
      break;
    }
  }
  const CMatrix full = symbol_matrix(in, out, c);
  std::vector<std::size_t> cols;
  for (std::size_t a = 0; a < in.monomial_count(); ++a) {
    const auto& k = in.monomial(a);
    if (std::all_of(k.begin(), k.end(), [&](int e) { return e + reach <= degree; }))
      for (std::size_t s = 0; s < in.coeff_dim(); ++s) cols.push_back(in.position(a, s));
  }
  QuotientModel m = quotient_model_from_submodule(
      out, span(full.cols_subset(cols), tol), degree - reach, tol);
  m.symbol = theta;
  m.exact = false;
  m.reach = reach;
  m.tail_bound = tail;
  return m;
}

CTuple model_tuple(const QuotientModel& m) { return validate(m.model_ops, m.tol); }

Subspace quotient_window(const QuotientModel& m, int margin) {
  if (margin == 0) return m.quotient_window;
  const Subspace w = degree_window(m.space, m.window_degree - margin);
  const Subspace qw = intersect(m.quotient, w, m.tol);
  return {m.quotient.dim(), adj_mul(m.quotient.basis, qw.basis)};
}

WindowMask quotient_mask(const QuotientModel& m, int margin) {
  return WindowMask::from_subspace(quotient_window(m, margin));
}

Subspace shifted_submodule(const QuotientModel& m, std::size_t i) {
  const Subspace low = minus(m.submodule, top_degree(m.space, i), m.tol);
  return span(m.shifts.at(i) * low.basis, m.tol);
}

Subspace wandering_subspace(const QuotientModel& m, const IndexSet& p) {
  Subspace w = m.submodule;
  for (int i : p) {
    if (i < 0 || static_cast<std::size_t>(i) >= m.space.n()) {
      throw Error(ErrorCode::BadIndex, "variable index", {.i = i});
    }
    const Subspace layer =
        minus(m.submodule, shifted_submodule(m, static_cast<std::size_t>(i)), m.tol);
    w = intersect(w, layer, m.tol);
  }
  return w;
}

std::vector<std::size_t> ahern_clark_growth(const InnerSymbol& theta, int from,
                                            int to, const Tolerances& tol) {
  std::vector<std::size_t> dims;
  for (int d = from; d <= to; ++d)
    dims.push_back(quotient_model(d, theta, tol).quotient.dim());
  return dims;
}

}  // namespace polydisc
