// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#pragma once

#include <optional>
#include <vector>

#include "polydisc/check.hpp"
#include "polydisc/hardy_space.hpp"
#include "polydisc/tuple.hpp"

namespace polydisc {

// Truncated embedding h -> D_{T*} prod_i (I - w_i T_i^*)^{-1} h into
// vector-valued polynomials with coefficients in the range of D_{T*}.
// The coefficient of z^k is B^H D_{T*} T^{*k}, B the output basis.
struct Dilation {
  CTuple tuple;
  int degree = 0;
  HardySpace space;     // coefficients in C^{rank D_{T*}}
  CMatrix output_basis; // dim x rank, orthonormal basis of ran D_{T*}
  CMatrix defect;       // D_{T*}
  CMatrix embedding;    // space.dim() x dim
  double tail_bound = 0.0;
};

// Smallest N with rho^{N+1} sqrt(n) dim <= tol, capped at 64; nilpotent
// tuples get their dimension.
int auto_dilation_degree(const CTuple& t);
Dilation build_dilation(const CTuple& t, std::optional<int> degree = {});

// Rigorous bound on the isometry defect from the powers of each T_i:
// ||D_{T*}||^2 (prod_i S_i - prod_i A_i), with A_i the in-box sum of
// ||T_i^m||^2 and S_i a submultiplicative bound on the full sum.
double dilation_tail_bound(const CTuple& t, const CMatrix& defect, int degree);

struct DilationDefects {
  double isometry = 0.0;       // ||Pi^H Pi - I||
  double intertwining = 0.0;   // ||P (Pi T_i^* - M_i^* Pi)||, top degree masked
  double minimality = 0.0;     // worst distance of a window monomial to the
                               // span of shifted images
  double model_equivalence = 0.0;  // ||Pi^H M_i Pi - T_i||
  double tail_bound = 0.0;
  int minimality_window = 0;
};
DilationDefects dilation_defects(const Dilation& d);
std::vector<Check> dilation_checks(const DilationDefects& d, double slack = 1e-10);

// Range of the embedding.
Subspace dilation_image(const Dilation& d);

}  // namespace polydisc
