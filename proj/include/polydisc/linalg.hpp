// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#pragma once

#include <vector>

#include "polydisc/cmatrix.hpp"

namespace polydisc {

// Every relative threshold below is taken against max(||A||, 1): all the
// operators in this library are built from contractions, so unit scale is
// the natural floor and it keeps rounding noise on zero operators out of
// ranks.
struct Tolerances {
  double structural = 1e-10;  // equalities, commutation, contraction
  double rank = 1e-9;         // numerical rank cut-off
  double psd_clamp = 1e-10;   // negative eigenvalues accepted as zero
  double pure = 1e-8;         // margin below 1 for spectral radii

  void validate() const;
};

struct Subspace;

// Eigenvalues sorted in descending order, eigenvectors as columns.
struct HermEig {
  std::vector<double> values;
  CMatrix vectors;
};

HermEig herm_eig(const CMatrix& a, const Tolerances& tol = {});
std::vector<double> herm_eigenvalues(const CMatrix& a,
                                     const Tolerances& tol = {});
double min_eigenvalue(const CMatrix& a, const Tolerances& tol = {});

double spectral_norm(const CMatrix& a);
std::vector<double> singular_values(const CMatrix& a);
std::vector<cplx> eigenvalues(const CMatrix& a);

// Thin SVD a = u diag(s) v^H, singular values descending.
struct Svd {
  CMatrix u;
  std::vector<double> s;
  CMatrix v;
};
Svd svd(const CMatrix& a);
// Unitary polar factor u v^H of a square matrix.
CMatrix polar_unitary(const CMatrix& a);
double spectral_radius(const CMatrix& a);

// Solves a x = b by partial-pivot LU. Throws SingularResolvent when the
// reciprocal condition estimate falls below min_rcond.
CMatrix lu_solve(const CMatrix& a, const CMatrix& b, double min_rcond = 1e-14);
CMatrix inverse(const CMatrix& a, double min_rcond = 1e-14);

// Upper triangular r with g = r^H r. Throws NearSingularGram when the
// eigenvalue ratio of g exceeds max_cond.
CMatrix cholesky_upper(const CMatrix& g, double max_cond);

}  // namespace polydisc
