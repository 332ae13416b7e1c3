// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polydisc/cmatrix.hpp"
#include "polydisc/subspace.hpp"

namespace polydisc {

using MultiIndex = std::vector<int>;

// Vector-valued polynomials in n variables with every exponent at most
// `degree`, coefficients in C^coeff_dim. Monomials are ordered by total
// degree, ties broken lexicographically with larger leading exponents first;
// position(m, r) = m * coeff_dim + r.
class HardySpace {
 public:
  static constexpr std::size_t kDefaultCap = 1'000'000;

  HardySpace(std::size_t n, int degree, std::size_t coeff_dim,
             std::size_t cap = kDefaultCap);

  std::size_t n() const { return n_; }
  int degree() const { return degree_; }
  std::size_t coeff_dim() const { return coeff_dim_; }
  std::size_t monomial_count() const { return monomials_.size(); }
  std::size_t dim() const { return monomials_.size() * coeff_dim_; }

  const MultiIndex& monomial(std::size_t m) const { return monomials_[m]; }
  std::optional<std::size_t> monomial_index(const MultiIndex& k) const;
  std::size_t position(std::size_t mono, std::size_t r) const {
    return mono * coeff_dim_ + r;
  }
  // Same variables and degree with another coefficient space.
  HardySpace with_coeff_dim(std::size_t coeff_dim) const;
  HardySpace with_degree(int degree) const;

 private:
  std::size_t n_;
  int degree_;
  std::size_t coeff_dim_;
  std::vector<MultiIndex> monomials_;
  std::vector<std::size_t> lookup_;  // mixed-radix code -> monomial index
};

// Multiplication by z_i; terms that would exceed the degree cap are dropped.
CMatrix shift_matrix(const HardySpace& s, std::size_t i);
// Coordinates whose exponents are all <= cap (empty when cap < 0).
// M_{z_i} x and M_{z_i}^H x without forming the shift matrix.
CMatrix apply_shift(const HardySpace& s, std::size_t i, const CMatrix& x);
CMatrix apply_shift_adjoint(const HardySpace& s, std::size_t i, const CMatrix& x);
// Rows of x outside the degree window set to zero.
CMatrix restrict_to_window(const HardySpace& s, const CMatrix& x, int cap);
Subspace degree_window(const HardySpace& s, int cap);
// Coordinates whose i-th exponent equals the degree cap.
Subspace top_degree(const HardySpace& s, std::size_t i);
// Inclusion of `small` into `big` (same n and coefficient space).
CMatrix inclusion(const HardySpace& small, const HardySpace& big);
// z^0 (x) e_r for every r: the constant functions.
Subspace constants(const HardySpace& s);
// Coefficient vectors of f: one column per monomial.
CMatrix coefficient_columns(const HardySpace& s, const CMatrix& f);

}  // namespace polydisc
