// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#pragma once

#include <cstddef>
#include <vector>

#include "polydisc/cmatrix.hpp"
#include "polydisc/linalg.hpp"

namespace polydisc {

// Orthonormal basis (columns) of a subspace of C^ambient. Bases produced
// here are ordered by decreasing weight and each column is phase-normalised
// so that its first non-negligible coordinate is real and positive.
struct Subspace {
  std::size_t ambient = 0;
  CMatrix basis;  // ambient x dim

  std::size_t dim() const { return basis.cols(); }
  CMatrix projector() const;

  static Subspace zero(std::size_t ambient);
  static Subspace whole(std::size_t ambient);
  static Subspace coordinates(std::size_t ambient,
                              const std::vector<std::size_t>& idx);
};

// Fixes the phase of every column in place.
void normalize_phases(CMatrix& basis);

// Range of a (SVD, descending singular values).
Subspace range_basis(const CMatrix& a, const Tolerances& tol = {});

// Square root and range of a positive semidefinite matrix. Throws NotPSD
// when the smallest eigenvalue is below -psd_clamp * max(||a||, 1).
struct PsdRoot {
  CMatrix root;
  Subspace range;
  std::vector<double> eigenvalues;  // descending
  double min_eig = 0.0;
  double max_eig = 0.0;
};
PsdRoot psd_root(const CMatrix& a, const Tolerances& tol = {});
CMatrix psd_sqrt(const CMatrix& a, const Tolerances& tol = {});
// Moore-Penrose inverse of the root, restricted to its range.
CMatrix psd_root_pinv(const PsdRoot& r);

struct LoewnerVerdict {
  bool holds = false;
  double witness_min_eig = 0.0;  // smallest eigenvalue of herm(b - a)
};
LoewnerVerdict loewner_leq(const CMatrix& a, const CMatrix& b,
                           const Tolerances& tol = {});

Subspace span(const CMatrix& vectors, const Tolerances& tol = {});
Subspace sum(const Subspace& a, const Subspace& b, const Tolerances& tol = {});
Subspace intersect(const Subspace& a, const Subspace& b,
                   const Tolerances& tol = {});
// a minus its part along b: the orthogonal complement of b inside a,
// computed as a * null(a^H P_b a).
Subspace minus(const Subspace& a, const Subspace& b,
               const Tolerances& tol = {});
Subspace complement(const Subspace& a, const Tolerances& tol = {});
// Image of a under the isometric embedding e (ambient of a = e.cols()).
Subspace embed(const CMatrix& e, const Subspace& a);

// ||P_a - P_b||
double subspace_distance(const Subspace& a, const Subspace& b);
// ||(I - P_s) v||
double containment_residual(const CMatrix& vectors, const Subspace& s);

}  // namespace polydisc
