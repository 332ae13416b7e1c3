// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "polydisc/defects.hpp"
#include "polydisc/dilation.hpp"
#include "polydisc/generators.hpp"
#include "polydisc/inner_symbol.hpp"
#include "polydisc/quotient_model.hpp"
#include "polydisc/tuple.hpp"

namespace polydisc {

using Point = std::vector<cplx>;

// D_{T*} prod_k (I - w_k T_k^*)^{-1} sum_j (w_j - T_j) prod_{i!=j} (I - w_i T_i^*) h_j
// for every column h~ = (h_1, ..., h_n) of htilde (nd x m). Returns d x m.
CMatrix eval_raw(const CTuple& t, const CMatrix& d_tstar,
                 std::span<const cplx> w, const CMatrix& htilde);

// Same quantity for a pair, through joint operator Blaschke factors.
CMatrix eval_pair_blaschke(const CTuple& t, const CMatrix& d_tstar,
                           std::span<const cplx> w, const CMatrix& htilde);

// Operator Blaschke factor (I - z X^*)^{-1} (z - X).
CMatrix operator_blaschke(const CMatrix& x, cplx z);

// Characteristic function of a Beurling tuple, optionally restricted to a
// window on which the tuple is Beurling.
class CharFn {
 public:
  const CTuple& tuple() const { return s_->tuple; }
  const DefectPackage& defects() const { return s_->defects; }
  const std::optional<WindowMask>& mask() const { return s_->mask; }
  std::size_t n() const { return s_->tuple.n(); }
  std::size_t input_dim() const { return s_->input.dim(); }
  std::size_t output_dim() const { return s_->output.dim(); }
  // Orthonormal basis of D_T inside C^{nd}, descending eigenvalue order.
  const Subspace& input_basis() const { return s_->input; }
  // Orthonormal basis of D_{T*} inside C^d.
  const Subspace& output_basis() const { return s_->output; }
  const std::vector<double>& input_eigenvalues() const { return s_->input_eigs; }
  // Joint defect root restricted to the window, and its pseudo-inverse
  // applied to the input basis.
  const CMatrix& joint_root() const { return s_->joint_root; }
  const CMatrix& preimages() const { return s_->preimages; }

  // Matrix of Theta_T(w): output_dim x input_dim.
  CMatrix eval(std::span<const cplx> w) const;

  friend CharFn build_charfn(const CTuple& t, const std::optional<WindowMask>& mask);

 private:
  struct State {
    CTuple tuple;
    DefectPackage defects;
    std::optional<WindowMask> mask;
    Subspace input;
    Subspace output;
    std::vector<double> input_eigs;
    CMatrix joint_root;
    CMatrix preimages;
  };
  explicit CharFn(std::shared_ptr<const State> s) : s_(std::move(s)) {}
  std::shared_ptr<const State> s_;
};

// Throws NotBeurling when the tuple (on the window) fails the Beurling test.
CharFn build_charfn(const CTuple& t, const std::optional<WindowMask>& mask = {});

// One-variable closed form [-T + w D_{T*} (I - w T^*)^{-1} D_T] in the
// bases of D_T and D_{T*} used by build_charfn.
CMatrix eval_onevar(const CTuple& t, cplx w);

// max over the grid of ||Theta(z)^H Theta(z) - I||.
InnerResidual inner_residual(const CharFn& f, std::span<const Point> grid);
InnerResidual inner_residual(const CharFn& f, int per_axis);

// max over points of ||Theta(w)|| - 1, clamped below at 0.
double contractivity_excess(const CharFn& f, std::span<const Point> points);

// Largest spectral-norm mismatch between Taylor coefficients of
// M_Theta D_T h~ (from the closed form, on a torus grid) and of
// sum_i prod_{j!=i} Delta_{M_j,T_j}(M_i Pi - Pi T_i) h_i (from the
// dilation), over all exponents of the dilation box, for all h~.
double dilation_form_residual(const CTuple& t, const Dilation& d);

// blockdiag(Theta_T, I_extra) as a sampled inner symbol.
InnerSymbol inner_block_compose(const CharFn& f, std::size_t extra_dim);

// Unitaries with Theta_T(w) = tau_star Theta_S(w) tau^H.
struct Coincidence {
  CMatrix tau;        // D_S -> D_T
  CMatrix tau_star;   // D_{S*} -> D_{T*}
  double residual = 0.0;
  double tau_unitarity = 0.0;
  double tau_star_unitarity = 0.0;
};

struct CoincidenceResult {
  CTuple conjugated;  // S = sigma T sigma^H
  Coincidence coincidence;
};

// Throws NotUnitary unless sigma is a d x d unitary.
CoincidenceResult coincidence_from_unitary(const CTuple& t, const CMatrix& sigma,
                                           std::span<const Point> points,
                                           const std::optional<WindowMask>& mask = {});

// Smallest max_w ||F(w) - U G(w) V^H|| found over random unitary starts
// refined by alternating Procrustes steps. Infinite when shapes differ.
double best_alignment_residual(const CharFn& f, const CharFn& g,
                               std::span<const Point> points, gen::Rng& rng,
                               int trials = 50, int refinements = 8);

// Points with coordinates uniform in the disc of the given radius.
std::vector<Point> interior_points(gen::Rng& rng, std::size_t n,
                                   std::size_t count, double radius = 0.9);

// Recovery of a model symbol from the characteristic function of its
// compressed shifts. tau_star sends D_{C*} into E*, tau sends D_C into E.
struct SymbolRecovery {
  CMatrix tau;
  CMatrix tau_star;
  double residual = 0.0;           // max ||tau_star Theta_C(w) - Theta(w) tau||
  double tau_isometry = 0.0;       // ||tau^H tau - I||
  double tau_star_isometry = 0.0;  // ||tau_star^H tau_star - I||
};
SymbolRecovery recover_symbol(const QuotientModel& m, const CharFn& f,
                              std::span<const Point> points);

}  // namespace polydisc
