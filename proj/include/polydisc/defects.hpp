// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polydisc/cmatrix.hpp"
#include "polydisc/subspace.hpp"
#include "polydisc/tuple.hpp"

namespace polydisc {

// Index sets are sorted, zero-based operator indices.
using IndexSet = std::vector<int>;

// x a x^H
CMatrix delta_map(const CMatrix& x, const CMatrix& a);
// a - x a x^H
CMatrix one_minus_delta(const CMatrix& x, const CMatrix& a);

// I - T_j^H T_j with (I - Delta_{T_k}) applied for every k in p.
// Throws BadIndex when j is out of range or belongs to p.
CMatrix truncated_defect(const CTuple& t, int j, std::span<const int> p);
// Same, but the maps are applied in the given order.
CMatrix truncated_defect_in_order(const CTuple& t, int j,
                                  std::span<const int> order);
// truncated_defect over every index except j.
CMatrix full_truncated_defect(const CTuple& t, int j);

// [T_j, T_i^H] with (I - Delta_{T_k}) applied for every k outside {i, j}.
CMatrix joint_commutator(const CTuple& t, int i, int j);

// n x n block operator with full truncated defects on the diagonal and
// joint commutators off it.
struct JointDefect {
  CMatrix square;
  double anti_hermitian_residual = 0.0;
  double min_eig = 0.0;
  std::optional<PsdRoot> root;  // present when the square is positive
};
JointDefect joint_defect(const CTuple& t);
// Assembles the block operator without checks (square only).
CMatrix joint_defect_square(const CTuple& t);

// Classical defects on the diagonal, [T_j, T_i^H] in block (i, j).
struct CommutatorDefect {
  CMatrix square;
  double min_eig = 0.0;
};
CommutatorDefect commutator_defect(const CTuple& t);

// Max of the two series residuals for one (j, p): the classical defect of
// T_j rebuilt from the p-truncated one, and the p-truncated defect rebuilt
// from the fully truncated one. Multi-indices range over {0..cutoff}^|.|.
double defect_series_residual(const CTuple& t, int j, std::span<const int> p,
                              int cutoff);
// ceil(log(tol) / (2 log rho)) capped at 200, rho the largest spectral
// radius. Nilpotent tuples get the dimension (an upper bound on the index).
int default_series_cutoff(const CTuple& t, double tol);

struct DefectPackage {
  CTuple tuple;
  DefectRoot first_kind;                  // D_{T*}
  std::vector<DefectRoot> classical;      // D_{T_i}
  std::map<std::pair<int, IndexSet>, CMatrix> truncated;
  std::map<std::pair<int, int>, CMatrix> joint_commutators;
  JointDefect joint;
  CommutatorDefect commutator;
};
// Throws NotSzego when the first-kind defect does not exist.
DefectPackage build_defect_package(const CTuple& t);

// Sends each basis vector (h_1, ..., h_n) of the joint defect space to
// sum_j h_j. The sum is isometric on that space when the fully truncated
// defects have mutually orthogonal ranges.
struct DefectEmbedding {
  Subspace flattened;
  double orthogonality_residual = 0.0;  // max ||D_{i,T} D_{j,T}||, i != j
  double classical_residual = 0.0;      // max ||D_{T_i} D_{T_j}||, i != j
  double isometry_residual = 0.0;       // ||F^H F - I|| on the basis
  bool isometric = false;
};
DefectEmbedding embed_joint_defect(const DefectPackage& pkg);

// All subsets of {0..n-1} without j, smallest first.
std::vector<IndexSet> subsets_without(std::size_t n, int j);

}  // namespace polydisc
