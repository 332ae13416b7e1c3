// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#include "polydisc/hardy_space.hpp"

#include <algorithm>
#include <numeric>

#include "polydisc/error.hpp"

namespace polydisc {

namespace {

std::size_t code_of(const MultiIndex& k, int degree) {
  std::size_t c = 0;
  for (int e : k) c = c * static_cast<std::size_t>(degree + 1) + static_cast<std::size_t>(e);
  return c;
}

}  // namespace

HardySpace::HardySpace(std::size_t n, int degree, std::size_t coeff_dim,
                       std::size_t cap)
    : n_(n), degree_(degree), coeff_dim_(coeff_dim) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "need at least one variable");
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  double count = static_cast<double>(coeff_dim);
  for (std::size_t i = 0; i < n; ++i) count *= degree + 1;
  if (count > static_cast<double>(cap)) {
    throw Error(ErrorCode::DimensionOverflow, "truncated space too large",
                {.value = count});
  }
  std::size_t monos = 1;
  for (std::size_t i = 0; i < n; ++i) monos *= static_cast<std::size_t>(degree + 1);
  monomials_.reserve(monos);
  MultiIndex k(n, 0);
  for (std::size_t c = 0; c < monos; ++c) {
    std::size_t rest = c;
    for (std::size_t i = n; i-- > 0;) {
      k[i] = static_cast<int>(rest % static_cast<std::size_t>(degree + 1));
      rest /= static_cast<std::size_t>(degree + 1);
    }
    monomials_.push_back(k);
  }
  std::stable_sort(monomials_.begin(), monomials_.end(),
                   [](const MultiIndex& a, const MultiIndex& b) {
                     const int da = std::accumulate(a.begin(), a.end(), 0);
                     const int db = std::accumulate(b.begin(), b.end(), 0);
                     if (da != db) return da < db;
                     return a > b;
                   });
  lookup_.assign(monos, 0);
  for (std::size_t m = 0; m < monos; ++m) lookup_[code_of(monomials_[m], degree)] = m;
}

std::optional<std::size_t> HardySpace::monomial_index(const MultiIndex& k) const {
  if (k.size() != n_) return std::nullopt;
  for (int e : k)
    if (e < 0 || e > degree_) return std::nullopt;
  return lookup_[code_of(k, degree_)];
}

HardySpace HardySpace::with_coeff_dim(std::size_t coeff_dim) const {
  return HardySpace(n_, degree_, coeff_dim);
}

HardySpace HardySpace::with_degree(int degree) const {
  return HardySpace(n_, degree, coeff_dim_);
}

CMatrix shift_matrix(const HardySpace& s, std::size_t i) {
  if (i >= s.n()) throw Error(ErrorCode::BadIndex, "shift variable", {.i = static_cast<int>(i)});
  CMatrix m(s.dim(), s.dim());
  for (std::size_t a = 0; a < s.monomial_count(); ++a) {
    MultiIndex k = s.monomial(a);
    ++k[i];
    const auto b = s.monomial_index(k);
    if (!b) continue;
    for (std::size_t r = 0; r < s.coeff_dim(); ++r)
      m(s.position(*b, r), s.position(a, r)) = 1.0;
  }
  return m;
}

namespace {

void copy_row_block(const HardySpace& s, const CMatrix& x, std::size_t from,
                    std::size_t to, CMatrix& out) {
  const std::size_t w = x.cols();
  for (std::size_t r = 0; r < s.coeff_dim(); ++r)
    std::copy_n(x.data() + s.position(from, r) * w, w,
                out.data() + s.position(to, r) * w);
}

}  // namespace

CMatrix apply_shift(const HardySpace& s, std::size_t i, const CMatrix& x) {
  if (i >= s.n()) throw Error(ErrorCode::BadIndex, "shift variable", {.i = static_cast<int>(i)});
  if (x.rows() != s.dim()) throw Error(ErrorCode::ShapeMismatch, "apply_shift");
  CMatrix out(x.rows(), x.cols());
  for (std::size_t a = 0; a < s.monomial_count(); ++a) {
    MultiIndex k = s.monomial(a);
    ++k[i];
    if (const auto b = s.monomial_index(k)) copy_row_block(s, x, a, *b, out);
  }
  return out;
}

CMatrix apply_shift_adjoint(const HardySpace& s, std::size_t i, const CMatrix& x) {
  if (i >= s.n()) throw Error(ErrorCode::BadIndex, "shift variable", {.i = static_cast<int>(i)});
  if (x.rows() != s.dim()) throw Error(ErrorCode::ShapeMismatch, "apply_shift_adjoint");
  CMatrix out(x.rows(), x.cols());
  for (std::size_t a = 0; a < s.monomial_count(); ++a) {
    MultiIndex k = s.monomial(a);
    ++k[i];
    if (const auto b = s.monomial_index(k)) copy_row_block(s, x, *b, a, out);
  }
  return out;
}

CMatrix restrict_to_window(const HardySpace& s, const CMatrix& x, int cap) {
  if (x.rows() != s.dim()) throw Error(ErrorCode::ShapeMismatch, "restrict_to_window");
  CMatrix out(x.rows(), x.cols());
  for (std::size_t a = 0; a < s.monomial_count(); ++a) {
    const auto& k = s.monomial(a);
    if (std::all_of(k.begin(), k.end(), [cap](int e) { return e <= cap; }))
      copy_row_block(s, x, a, a, out);
  }
  return out;
}

Subspace degree_window(const HardySpace& s, int cap) {
  std::vector<std::size_t> idx;
  for (std::size_t a = 0; a < s.monomial_count(); ++a) {
    const auto& k = s.monomial(a);
    if (std::all_of(k.begin(), k.end(), [cap](int e) { return e <= cap; }))
      for (std::size_t r = 0; r < s.coeff_dim(); ++r) idx.push_back(s.position(a, r));
  }
  return Subspace::coordinates(s.dim(), idx);
}

Subspace top_degree(const HardySpace& s, std::size_t i) {
  std::vector<std::size_t> idx;
  for (std::size_t a = 0; a < s.monomial_count(); ++a)
    if (s.monomial(a)[i] == s.degree())
      for (std::size_t r = 0; r < s.coeff_dim(); ++r) idx.push_back(s.position(a, r));
  return Subspace::coordinates(s.dim(), idx);
}

CMatrix inclusion(const HardySpace& small, const HardySpace& big) {
  if (small.n() != big.n() || small.coeff_dim() != big.coeff_dim() ||
      small.degree() > big.degree()) {
    throw Error(ErrorCode::IncompatibleDims, "spaces are not nested");
  }
  CMatrix e(big.dim(), small.dim());
  for (std::size_t a = 0; a < small.monomial_count(); ++a) {
    const std::size_t b = *big.monomial_index(small.monomial(a));
    for (std::size_t r = 0; r < small.coeff_dim(); ++r)
      e(big.position(b, r), small.position(a, r)) = 1.0;
  }
  return e;
}

Subspace constants(const HardySpace& s) {
  std::vector<std::size_t> idx;
  const std::size_t zero = *s.monomial_index(MultiIndex(s.n(), 0));
  for (std::size_t r = 0; r < s.coeff_dim(); ++r) idx.push_back(s.position(zero, r));
  return Subspace::coordinates(s.dim(), idx);
}

CMatrix coefficient_columns(const HardySpace& s, const CMatrix& f) {
  if (f.rows() != s.dim() || f.cols() != 1) {
    throw Error(ErrorCode::ShapeMismatch, "coefficient columns");
  }
  CMatrix out(s.coeff_dim(), s.monomial_count());
  for (std::size_t a = 0; a < s.monomial_count(); ++a)
    for (std::size_t r = 0; r < s.coeff_dim(); ++r) out(r, a) = f(s.position(a, r), 0);
  return out;
}

}  // namespace polydisc
