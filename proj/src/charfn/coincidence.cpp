// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#include <algorithm>
#include <cmath>
#include <limits>

#include "polydisc/charfn.hpp"
#include "polydisc/error.hpp"

namespace polydisc {

namespace {

CMatrix scale_columns(CMatrix m, std::span<const double> eigs) {
  for (std::size_t k = 0; k < m.cols(); ++k) {
    const double s = 1.0 / std::sqrt(eigs[k]);
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, k) *= s;
  }
  return m;
}

}  // namespace

CoincidenceResult coincidence_from_unitary(const CTuple& t, const CMatrix& sigma,
                                           std::span<const Point> points,
                                           const std::optional<WindowMask>& mask) {
  if (sigma.rows() != t.dim() || sigma.cols() != t.dim()) {
    throw Error(ErrorCode::NotUnitary, "unitary does not match the tuple dimension");
  }
  const double defect =
      spectral_norm(adj_mul(sigma, sigma) - CMatrix::identity(t.dim()));
  if (!(defect <= 1e-10)) {
    throw Error(ErrorCode::NotUnitary, "matrix is not unitary", {.value = defect});
  }
  CTuple s = conjugate(t, sigma);
  std::optional<WindowMask> mask_s;
  if (mask) mask_s = mask->transported(sigma);
  const CharFn ft = build_charfn(t, mask);
  const CharFn fs = build_charfn(s, mask_s);

  // tau_T->S (D_T h~) = D_S Sigma h~ and tau*_T->S (D_{T*} h) = D_{S*} sigma h.
  const std::vector<CMatrix> copies(t.n(), sigma);
  const CMatrix big_sigma = block_diagonal(copies);
  const CMatrix forward = adj_mul(fs.input_basis().basis, fs.joint_root() * (big_sigma * ft.preimages()));
  const DefectRoot& out_t = ft.defects().first_kind;
  const CMatrix out_pre = scale_columns(out_t.space.basis, out_t.eigenvalues);
  const CMatrix forward_star = adj_mul(fs.output_basis().basis,
                                       fs.defects().first_kind.op * (sigma * out_pre));

  Coincidence c;
  c.tau = forward.adjoint();
  c.tau_star = forward_star.adjoint();
  auto unitarity = [](const CMatrix& u) {
    if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
    const CMatrix id = CMatrix::identity(u.rows());
    return std::max(spectral_norm(adj_mul(u, u) - id), spectral_norm(mul_adj(u, u) - id));
  };
  c.tau_unitarity = unitarity(c.tau);
  c.tau_star_unitarity = unitarity(c.tau_star);
  for (const auto& w : points) {
    const CMatrix diff = ft.eval(w) - c.tau_star * mul_adj(fs.eval(w), c.tau);
    c.residual = std::max(c.residual, spectral_norm(diff));
  }
  return {std::move(s), std::move(c)};
}

double best_alignment_residual(const CharFn& f, const CharFn& g,
                               std::span<const Point> points, gen::Rng& rng, int trials,
                               int refinements) {
  if (f.n() != g.n() || f.input_dim() != g.input_dim() ||
      f.output_dim() != g.output_dim()) {
    return std::numeric_limits<double>::infinity();
  }
  std::vector<CMatrix> fv;
  std::vector<CMatrix> gv;
  for (const auto& w : points) {
    fv.push_back(f.eval(w));
    gv.push_back(g.eval(w));
  }
  const std::size_t ri = f.input_dim();
  const std::size_t ro = f.output_dim();
  auto residual = [&](const CMatrix& u, const CMatrix& v) {
    double worst = 0.0;
    for (std::size_t k = 0; k < fv.size(); ++k)
      worst = std::max(worst, spectral_norm(fv[k] - u * mul_adj(gv[k], v)));
    return worst;
  };
  double best = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < trials; ++trial) {
    CMatrix u = gen::haar_unitary(rng, ro);
    CMatrix v = gen::haar_unitary(rng, ri);
    for (int step = 0; step < refinements; ++step) {
      // Maximise Re tr(F^H U G V^H) in U, then in V.
      CMatrix mu(ro, ro);
      for (std::size_t k = 0; k < fv.size(); ++k) mu += mul_adj(gv[k], fv[k] * v);
      u = polar_unitary(mu).adjoint();
      CMatrix mv(ri, ri);
      for (std::size_t k = 0; k < fv.size(); ++k) mv += adj_mul(fv[k], u * gv[k]);
      v = polar_unitary(mv);
    }
    best = std::min(best, residual(u, v));
  }
  return best;
}

}  // namespace polydisc
