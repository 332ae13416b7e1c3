// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#include "polydisc/dilation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "polydisc/error.hpp"

namespace polydisc {

int auto_dilation_degree(const CTuple& t) {
  double rho = 0.0;
  for (double r : is_pure(t).spectral_radii) rho = std::max(rho, r);
  if (rho < 1e-12) return static_cast<int>(t.dim());
  if (rho >= 1.0) return 64;
  const double scale = std::sqrt(static_cast<double>(t.n())) * static_cast<double>(t.dim());
  // rho^{N+1} * scale <= tol
  const double need = std::log(t.tol().structural / scale) / std::log(rho) - 1.0;
  return static_cast<int>(std::clamp(std::ceil(need), 1.0, 64.0));
}

double dilation_tail_bound(const CTuple& t, const CMatrix& defect, int degree) {
  const double dnorm = spectral_norm(defect);
  std::vector<double> in_box(t.n(), 0.0);
  std::vector<double> beyond(t.n(), 0.0);
  for (std::size_t i = 0; i < t.n(); ++i) {
    CMatrix power = CMatrix::identity(t.dim());
    for (int m = 0; m <= degree; ++m) {
      const double c = spectral_norm(power);
      in_box[i] += c * c;
      power = power * t.op(i);
    }
    const double c_next = spectral_norm(power);  // ||T_i^{N+1}||
    if (c_next >= 1.0) return std::numeric_limits<double>::infinity();
    // ||T^m|| <= ||T^{N+1}||^q ||T^r|| with m = q (N+1) + r.
    beyond[i] = c_next * c_next / (1.0 - c_next * c_next) * in_box[i];
  }
  // prod(in_box + beyond) - prod(in_box), expanded without cancellation.
  double excess = 0.0;
  for (std::size_t i = 0; i < t.n(); ++i) {
    double term = beyond[i];
    for (std::size_t k = 0; k < t.n(); ++k) {
      if (k < i) term *= in_box[k] + beyond[k];
      if (k > i) term *= in_box[k];
    }
    excess += term;
  }
  return dnorm * dnorm * excess;
}

Dilation build_dilation(const CTuple& t, std::optional<int> degree) {
  const int deg = degree.value_or(auto_dilation_degree(t));
  if (deg < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  const DefectRoot first = defect_first_kind(t);
  const CMatrix& ob = first.space.basis;
  const std::size_t rank = ob.cols();
  if (rank == 0) {
    throw Error(ErrorCode::NotAvailable, "first-kind defect vanishes");
  }
  HardySpace space(t.n(), deg, rank);

  // powers[i][m] = (T_i^*)^m
  std::vector<std::vector<CMatrix>> powers(t.n());
  for (std::size_t i = 0; i < t.n(); ++i) {
    powers[i].push_back(CMatrix::identity(t.dim()));
    for (int m = 1; m <= deg; ++m) powers[i].push_back(powers[i].back() * t.adjoints()[i]);
  }
  const CMatrix head = adj_mul(ob, first.op);  // B^H D_{T*}
  CMatrix emb(space.dim(), t.dim());
  for (std::size_t a = 0; a < space.monomial_count(); ++a) {
    const MultiIndex& k = space.monomial(a);
    CMatrix block = head;
    for (std::size_t i = 0; i < t.n(); ++i)
      if (k[i] > 0) block = block * powers[i][static_cast<std::size_t>(k[i])];
    emb.set_block(space.position(a, 0), 0, block);
  }
  const double tail = dilation_tail_bound(t, first.op, deg);
  return {t, deg, space, ob, first.op, emb, tail};
}

DilationDefects dilation_defects(const Dilation& d) {
  const CTuple& t = d.tuple;
  const HardySpace& sp = d.space;
  const CMatrix& pi = d.embedding;
  DilationDefects out;
  out.tail_bound = d.tail_bound;
  out.isometry = spectral_norm(adj_mul(pi, pi) - CMatrix::identity(t.dim()));

  for (std::size_t i = 0; i < t.n(); ++i) {
    const CMatrix diff = pi * t.adjoints()[i] - apply_shift_adjoint(sp, i, pi);
    out.intertwining = std::max(
        out.intertwining, spectral_norm(restrict_to_window(sp, diff, sp.degree() - 1)));
    out.model_equivalence = std::max(
        out.model_equivalence,
        spectral_norm(adj_mul(pi, apply_shift(sp, i, pi)) - t.op(i)));
  }

  // Minimality on a small window: shifted copies of the image must reach
  // every monomial of low degree.
  const std::size_t width = std::max(t.dim(), sp.coeff_dim());
  int w = std::max(0, sp.degree() - 1);
  auto count = [&](int cap) {
    std::size_t c = 1;
    for (std::size_t i = 0; i < sp.n(); ++i) c *= static_cast<std::size_t>(cap + 1);
    return c;
  };
  while (w > 0 && count(w) * width > 400) --w;
  out.minimality_window = w;
  const HardySpace small(sp.n(), w, sp.coeff_dim());
  CMatrix gens(small.dim(), small.monomial_count() * t.dim());
  MultiIndex diffk(sp.n());
  for (std::size_t s = 0; s < small.monomial_count(); ++s) {
    const MultiIndex& shift = small.monomial(s);
    for (std::size_t a = 0; a < small.monomial_count(); ++a) {
      const MultiIndex& target = small.monomial(a);
      bool ok = true;
      for (std::size_t i = 0; i < sp.n(); ++i) {
        diffk[i] = target[i] - shift[i];
        if (diffk[i] < 0) ok = false;
      }
      if (!ok) continue;
      const std::size_t src = *sp.monomial_index(diffk);
      for (std::size_t r = 0; r < sp.coeff_dim(); ++r)
        for (std::size_t l = 0; l < t.dim(); ++l)
          gens(small.position(a, r), s * t.dim() + l) = pi(sp.position(src, r), l);
    }
  }
  const Subspace reach = range_basis(gens, t.tol());
  const CMatrix miss =
      CMatrix::identity(small.dim()) - reach.projector();
  for (std::size_t c = 0; c < miss.cols(); ++c)
    out.minimality = std::max(out.minimality, miss.col(c).frobenius_norm());
  return out;
}

std::vector<Check> dilation_checks(const DilationDefects& d, double slack) {
  const double bound = d.tail_bound + slack;
  return {make_check("dilation_isometry", d.isometry, bound),
          make_check("dilation_intertwining", d.intertwining, slack),
          make_check("dilation_minimality", d.minimality, 1e-8),
          make_check("dilation_model_equivalence", d.model_equivalence, bound)};
}

Subspace dilation_image(const Dilation& d) {
  return range_basis(d.embedding, d.tuple.tol());
}

}  // namespace polydisc
