// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#pragma once

#include <optional>
#include <vector>

#include "polydisc/check.hpp"
#include "polydisc/defects.hpp"
#include "polydisc/hardy_space.hpp"
#include "polydisc/inner_symbol.hpp"
#include "polydisc/tuple.hpp"

namespace polydisc {

// Truncated multiplication by a symbol: column z^m (x) e_s of `in` goes to
// sum_k z^{m+k} (x) C_k e_s in `out`, dropping terms beyond its degree.
CMatrix symbol_matrix(const HardySpace& in, const HardySpace& out,
                      const SymbolCoefficients& c);

// Compression of the coordinate shifts to H_N(E*) minus the submodule
// Theta H^2(E), everything in the coordinates of `space`.
struct QuotientModel {
  HardySpace space;                    // H_N(E*)
  std::optional<InnerSymbol> symbol;
  Subspace submodule;                  // S cap H_N
  Subspace quotient;                   // H_N minus S
  std::vector<CMatrix> shifts;         // truncated M_{z_i} on space
  std::vector<CMatrix> model_ops;      // compressions, quotient coordinates
  int window_degree = -1;              // exponents <= this are exact
  Subspace window;                     // space coordinates
  Subspace quotient_window;            // quotient coordinates
  bool exact = false;                  // polynomial symbol
  int reach = 0;                       // coefficient degree used
  double tail_bound = 0.0;
  Tolerances tol;
};

QuotientModel quotient_model(int degree, const InnerSymbol& theta,
                             const Tolerances& tol = {});
// Model from an explicit submodule (no symbol). Used for the plain
// truncated polydisc shift, where the submodule is zero.
QuotientModel quotient_model_from_submodule(const HardySpace& space,
                                            const Subspace& submodule,
                                            int window_degree,
                                            const Tolerances& tol = {});

CTuple model_tuple(const QuotientModel& m);
// Quotient intersected with exponents <= window_degree - margin, in
// quotient coordinates.
Subspace quotient_window(const QuotientModel& m, int margin);
// Projection onto that subspace.
WindowMask quotient_mask(const QuotientModel& m, int margin = 0);

// z_i applied to the part of the submodule that does not overflow.
Subspace shifted_submodule(const QuotientModel& m, std::size_t i);
// Intersection over i in p of (submodule minus z_i submodule); the
// submodule itself when p is empty.
Subspace wandering_subspace(const QuotientModel& m, const IndexSet& p);

// Dimension of the truncated quotient for each degree in [from, to].
std::vector<std::size_t> ahern_clark_growth(const InnerSymbol& theta, int from,
                                            int to, const Tolerances& tol = {});

struct StructuralReport {
  std::vector<Check> checks;
  std::size_t quotient_dim = 0;
  std::size_t submodule_dim = 0;
  std::size_t wandering_dim = 0;          // W = Theta E, truncated
  std::size_t wandering_dim_reduced = 0;  // W inside the minimal reduction
  std::size_t defect_dim = 0;             // joint defect space on the window
  std::size_t coefficient_dim = 0;        // smallest E' with Q in H^2(E')
  std::size_t constant_meet_dim = 0;      // dim(S cap E*)
  bool minimal = false;
  bool all_pass() const { return polydisc::all_pass(checks); }
};

// Structural identities of the model, each restricted to the exact window.
// The window used is the exact one shrunk by `margin` degrees, so that one
// application of a shift stays exact.
StructuralReport structural_checks(const QuotientModel& m, int margin = 1,
                                   double threshold = 1e-8);

// The three equivalent Beurling conditions on the model tuple, evaluated on
// the exact window: product of defects, isometry on defect spaces, and
// shift invariance of defect spaces (shifting out of the truncation counts
// as leaving the space).
struct BeurlingBattery {
  double product_residual = 0.0;
  double isometry_residual = 0.0;
  double invariance_residual = 0.0;
};
BeurlingBattery beurling_condition_battery(const QuotientModel& m,
                                           int margin = 0);

}  // namespace polydisc
