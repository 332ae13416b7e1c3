// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "polydisc/cmatrix.hpp"
#include "polydisc/linalg.hpp"
#include "polydisc/subspace.hpp"

namespace polydisc {

// Orthogonal projection selecting the coordinates (or subspace) on which
// structural identities are checked. The full mask is the identity.
struct WindowMask {
  CMatrix projection;

  static WindowMask full(std::size_t dim);
  static WindowMask from_subspace(const Subspace& s);
  std::size_t dim() const { return projection.rows(); }
  // Conjugates by a unitary: the mask seen in the coordinates u maps to.
  WindowMask transported(const CMatrix& u) const;
  // Same projection repeated on each of n diagonal blocks.
  CMatrix block_repeat(std::size_t n) const;
};

// Commuting tuple of contractions on C^dim. Construct with validate().
class CTuple {
 public:
  std::size_t n() const { return ops_.size(); }
  std::size_t dim() const { return dim_; }
  const CMatrix& op(std::size_t i) const { return ops_.at(i); }
  const std::vector<CMatrix>& ops() const { return ops_; }
  const std::vector<CMatrix>& adjoints() const { return adj_; }
  const Tolerances& tol() const { return tol_; }

  friend CTuple validate(std::vector<CMatrix> matrices, const Tolerances& tol);

 private:
  std::size_t dim_ = 0;
  std::vector<CMatrix> ops_;
  std::vector<CMatrix> adj_;
  Tolerances tol_;
};

// Checks shape, finiteness, pairwise commutation and contractivity.
CTuple validate(std::vector<CMatrix> matrices, const Tolerances& tol = {});
// sigma T_i sigma^H for a unitary sigma.
CTuple conjugate(const CTuple& t, const CMatrix& sigma);

struct PurityReport {
  bool pure = false;
  std::vector<double> spectral_radii;
};
PurityReport is_pure(const CTuple& t);

// sum over k in {0,1}^n of (-1)^|k| T^k T^{*k}
CMatrix szego_inverse(const CTuple& t);
// The same operator as the composition of the maps X -> X - T_i X T_i^*.
CMatrix szego_inverse_iterated(const CTuple& t);

struct DefectRoot {
  CMatrix square;  // D^2
  CMatrix op;      // D
  Subspace space;  // closure of the range
  std::vector<double> eigenvalues;
};

// D_{T*} = (Szego inverse)^{1/2}. Throws NotSzego with the offending
// eigenvalue when the Szego inverse is not positive.
DefectRoot defect_first_kind(const CTuple& t);
// (I - X^H X)^{1/2}
DefectRoot classical_defect(const CMatrix& x, const Tolerances& tol = {});
// (I - X X^H)^{1/2}
DefectRoot classical_defect_adjoint(const CMatrix& x,
                                    const Tolerances& tol = {});

struct BeurlingVerdict {
  bool holds = false;
  double residual = 0.0;  // max over i != j of ||P D_{T_i} D_{T_j} P||
  int worst_i = -1;
  int worst_j = -1;
  bool pure = false;
  bool szego = false;
  bool masked = false;
};
BeurlingVerdict is_beurling(const CTuple& t,
                            const std::optional<WindowMask>& mask = {});

struct Classification {
  std::size_t n = 0;
  std::size_t dim = 0;
  bool commuting = true;  // validated tuples always commute
  bool contractive = true;
  double max_commutator = 0.0;
  std::vector<double> norms;
  PurityReport purity;
  bool szego = false;
  double szego_min_eig = 0.0;
  BeurlingVerdict beurling;
};
Classification classify(const CTuple& t,
                        const std::optional<WindowMask>& mask = {});

// Compression of the coordinate shifts to the span of Szego kernels at the
// given nodes, in an orthonormal basis obtained from the Gram matrix.
// Every node must lie in the open polydisc.
CTuple szego_tuple_from_nodes(std::span<const std::vector<cplx>> nodes,
                              const Tolerances& tol = {},
                              double max_gram_cond = 1e12);

}  // namespace polydisc
