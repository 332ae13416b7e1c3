// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "polydisc/cmatrix.hpp"
#include "polydisc/hardy_space.hpp"

namespace polydisc {

struct SymbolCoefficients {
  std::map<MultiIndex, CMatrix> terms;  // exponents all <= cap
  bool polynomial = false;
  std::vector<int> degree;  // per variable, meaningful when polynomial
  // Bound on sup over unit inputs e of the H^2 norm of the omitted terms.
  double tail_bound = 0.0;
};

struct InnerResidual {
  double residual = 0.0;  // max ||Theta^H Theta - I|| over the grid
  std::vector<cplx> worst_point;
};

// Matrix-valued function on the polydisc, built from the kinds below.
// Products compose left to right: product({A, B}) is z -> A(z) B(z).
class InnerSymbol {
 public:
  enum class Kind { Monomial, Blaschke1, Unitary, BlockDiag, Product, Sampled };
  using Evaluator = std::function<CMatrix(std::span<const cplx>)>;

  static InnerSymbol monomial(std::vector<int> exponent);
  // Finite Blaschke product in variable `var` (zero-based) with the given
  // zeros, as a function of n variables.
  static InnerSymbol blaschke1(std::size_t n, std::size_t var,
                               std::vector<cplx> zeros);
  // Constant isometry (output_dim x input_dim).
  static InnerSymbol unitary(std::size_t n, CMatrix w);
  static InnerSymbol block_diag(std::vector<InnerSymbol> parts);
  static InnerSymbol product(std::vector<InnerSymbol> factors);
  // Black-box function; Taylor coefficients are recovered from torus samples.
  static InnerSymbol sampled(std::size_t n, std::size_t output_dim,
                             std::size_t input_dim, Evaluator f);

  Kind kind() const;
  std::size_t n() const;
  std::size_t input_dim() const;
  std::size_t output_dim() const;

  const std::vector<int>& exponent() const;
  std::size_t var() const;
  const std::vector<cplx>& zeros() const;
  const CMatrix& matrix() const;
  const std::vector<InnerSymbol>& children() const;

  CMatrix eval(std::span<const cplx> z) const;
  SymbolCoefficients coefficients(int cap) const;
  InnerResidual torus_inner_residual(int per_axis) const;

 private:
  struct Node;
  explicit InnerSymbol(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

const char* kind_name(InnerSymbol::Kind k);

// Points exp(2 pi i m / per_axis) in every variable, row-major over axes.
std::vector<std::vector<cplx>> torus_grid(std::size_t n, int per_axis);

// Taylor coefficients with every exponent below per_axis of a function
// sampled on torus_grid(n, per_axis), by separable discrete Fourier
// transforms. Coefficients beyond the grid alias onto lower ones.
std::map<MultiIndex, CMatrix> torus_taylor_coefficients(
    std::size_t n, int per_axis, const std::vector<CMatrix>& samples);

}  // namespace polydisc
