// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#include <algorithm>
#include <cmath>
#include <numeric>

#include "polydisc/charfn.hpp"
#include "polydisc/error.hpp"

namespace polydisc {

namespace {

// Columns Theta e for the standard basis e of E, inside H_N(E*).
CMatrix constant_images(const QuotientModel& m) {
  const HardySpace& space = m.space;
  const InnerSymbol& theta = *m.symbol;
  const SymbolCoefficients c = theta.coefficients(space.degree());
  CMatrix out(space.dim(), theta.input_dim());
  for (std::size_t a = 0; a < space.monomial_count(); ++a) {
    const auto it = c.terms.find(space.monomial(a));
    if (it != c.terms.end()) out.set_block(space.position(a, 0), 0, it->second);
  }
  return out;
}

double isometry_defect(const CMatrix& u) {
  return spectral_norm(adj_mul(u, u) - CMatrix::identity(u.cols()));
}

}  // namespace

SymbolRecovery recover_symbol(const QuotientModel& m, const CharFn& f,
                              std::span<const Point> points) {
  if (!m.symbol) throw Error(ErrorCode::InvalidArgument, "model has no symbol");
  const std::size_t n = m.space.n();
  if (f.n() != n || f.tuple().dim() != m.quotient.dim()) {
    throw Error(ErrorCode::IncompatibleDims, "characteristic function is not of this model");
  }
  const CMatrix& bq = m.quotient.basis;

  // tau_star (D_{C*} h) = (B h)(0)
  const DefectRoot& out = f.defects().first_kind;
  CMatrix out_pre = out.space.basis;
  for (std::size_t k = 0; k < out_pre.cols(); ++k) {
    const double s = 1.0 / std::sqrt(out.eigenvalues[k]);
    for (std::size_t i = 0; i < out_pre.rows(); ++i) out_pre(i, k) *= s;
  }
  const Subspace e0 = constants(m.space);
  SymbolRecovery r;
  r.tau_star = adj_mul(e0.basis, bq * out_pre);

  // tau (D_C f~) = e with Theta e = sum_j P_W M_j f_j
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  const CMatrix pw = wandering_subspace(m, all).projector();
  std::vector<CMatrix> parts;
  for (std::size_t j = 0; j < n; ++j) parts.push_back(pw * (m.shifts[j] * bq));
  const CMatrix lift = hstack(parts);
  r.tau = adj_mul(constant_images(m), lift * f.preimages());

  r.tau_isometry = isometry_defect(r.tau);
  r.tau_star_isometry = isometry_defect(r.tau_star);
  for (const auto& w : points) {
    const CMatrix diff = r.tau_star * f.eval(w) - m.symbol->eval(w) * r.tau;
    r.residual = std::max(r.residual, spectral_norm(diff));
  }
  return r;
}

}  // namespace polydisc
