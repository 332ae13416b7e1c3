// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#include <algorithm>

#include "polydisc/error.hpp"
#include "polydisc/quotient_model.hpp"

namespace polydisc {

namespace {

// Everything the checks share, in the coordinates of the truncated space
// unless the name says otherwise.
struct Frame {
  const QuotientModel& m;
  std::size_t n;
  CMatrix b;          // quotient basis
  CMatrix ps;         // submodule projector
  CMatrix pq;         // quotient projector
  Subspace qw;        // quotient cap window
  CMatrix pqw;        // its projector
  CMatrix qmask;      // the same projection in quotient coordinates
  Subspace window;    // coordinate window
  CTuple tuple;

  Frame(const QuotientModel& model, int margin)
      : m(model),
        n(model.space.n()),
        b(model.quotient.basis),
        ps(model.submodule.projector()),
        pq(model.quotient.projector()),
        window(degree_window(model.space, model.window_degree - margin)),
        tuple(model_tuple(model)) {
    qw = intersect(model.quotient, window, model.tol);
    pqw = qw.projector();
    qmask = congruence(b.adjoint(), pqw);
  }

  CMatrix to_space(const CMatrix& x) const { return b * x * b.adjoint(); }
  CMatrix masked_q(const CMatrix& x) const { return qmask * x * qmask; }
};

double masked_norm(const CMatrix& mask, const CMatrix& x) {
  return spectral_norm(mask * x * mask);
}

// Largest part of the vectors that leaves s, counting the mass pushed past
// the truncation by z_i as leaving.
double shift_escape(const QuotientModel& m, std::size_t i, const CMatrix& v,
                    const Subspace& s) {
  if (v.cols() == 0) return 0.0;
  const double inside = containment_residual(m.shifts[i] * v, s);
  const Subspace top = top_degree(m.space, i);
  const double overflow = spectral_norm(adj_mul(top.basis, v));
  return std::max(inside, overflow);
}

// Range of the window-compressed positive operator x (quotient coords),
// returned in quotient coordinates.
Subspace window_range(const Frame& f, const CMatrix& x) {
  return range_basis(hermitian_part(f.masked_q(x)), f.m.tol);
}

}  // namespace

StructuralReport structural_checks(const QuotientModel& m, int margin,
                                   double threshold) {
  StructuralReport rep;
  rep.quotient_dim = m.quotient.dim();
  rep.submodule_dim = m.submodule.dim();
  const Tolerances& tol = m.tol;
  auto add = [&](const std::string& name, double v) {
    rep.checks.push_back(make_check(name, v, threshold));
  };

  // Constant unitary symbols fill the whole space: nothing to compress.
  if (m.quotient.dim() == 0) {
    double inv = 0.0;
    for (const auto& s : m.shifts)
      inv = std::max(inv, containment_residual(s * m.submodule.basis, m.submodule));
    add("submodule_invariance", inv);
    IndexSet all(m.space.n());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    const Subspace w = wandering_subspace(m, all);
    rep.wandering_dim = w.dim();
    rep.wandering_dim_reduced = 0;
    rep.minimal = false;
    add("wandering_is_constants", subspace_distance(w, constants(m.space)));
    return rep;
  }

  std::optional<Frame> fr;
  try {
    fr.emplace(m, margin);
  } catch (const Error& e) {
    rep.checks.push_back({std::string("model_tuple_valid: ") + e.what(),
                          std::numeric_limits<double>::infinity(), threshold,
                          false});
    return rep;
  }
  const Frame& f = *fr;
  const std::size_t n = f.n;
  const std::size_t q = f.b.cols();
  const CMatrix id_q = CMatrix::identity(q);

  // Invariance of the submodule and co-invariance of the quotient.
  {
    const Subspace sw = intersect(m.submodule, f.window, tol);
    double inv = 0.0;
    double coinv = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      inv = std::max(inv, containment_residual(m.shifts[i] * sw.basis, m.submodule));
      coinv = std::max(coinv, containment_residual(m.shifts[i].adjoint() * f.qw.basis,
                                                   m.quotient));
    }
    add("submodule_invariance", inv);
    add("quotient_coinvariance", coinv);
  }

  // Defects and commutators of the model through the submodule projector.
  std::vector<CMatrix> defect_sq;
  {
    double reduce = 0.0;
    double formula = 0.0;
    double comm = 0.0;
    const CMatrix pw = f.window.projector();
    for (std::size_t i = 0; i < n; ++i) {
      const CMatrix& mi = m.shifts[i];
      const CMatrix xi = adj_mul(mi, f.ps * mi);
      reduce = std::max(reduce, masked_norm(pw, f.pq * xi - xi * f.pq));
      const CMatrix& ci = f.tuple.op(i);
      defect_sq.push_back(hermitian_part(id_q - adj_mul(ci, ci)));
      formula = std::max(formula, spectral_norm(f.masked_q(
                                      defect_sq[i] - adj_mul(f.b, xi * f.b))));
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const CMatrix lhs = commutator(f.tuple.op(j), ci.adjoint());
        const CMatrix rhs = adj_mul(f.b, adj_mul(mi, f.ps * m.shifts[j]) * f.b);
        comm = std::max(comm, spectral_norm(f.masked_q(lhs - rhs)));
      }
    }
    add("reducing_compression", reduce);
    add("defect_formula", formula);
    add("commutator_formula", comm);
  }

  // Szego positivity and the two block defects on the window.
  const CMatrix joint = hermitian_part(joint_defect_square(f.tuple));
  const CMatrix qmask_n = WindowMask{f.qmask}.block_repeat(n);
  const CMatrix joint_w = hermitian_part(qmask_n * joint * qmask_n);
  {
    const double s_min = min_eigenvalue(szego_inverse(f.tuple), tol);
    add("szego_inverse_positive", std::max(0.0, -s_min));
    add("joint_defect_positive", std::max(0.0, -min_eigenvalue(joint_w, tol)));
    const CMatrix comm_w = hermitian_part(
        qmask_n * commutator_defect(f.tuple).square * qmask_n);
    const LoewnerVerdict lv = loewner_leq(joint_w, comm_w, tol);
    add("joint_below_commutator_defect", std::max(0.0, -lv.witness_min_eig));
  }

  // Beurling conditions on the window.
  {
    const BeurlingBattery bb = beurling_condition_battery(m, margin);
    add("beurling_product", bb.product_residual);
    add("beurling_isometry_on_defects", bb.isometry_residual);
    add("beurling_shift_invariant_defects", bb.invariance_residual);
  }

  // Wandering subspaces.
  std::vector<Subspace> w_without;  // W over every index but j
  for (std::size_t j = 0; j < n; ++j) {
    IndexSet rest;
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) rest.push_back(static_cast<int>(k));
    w_without.push_back(wandering_subspace(m, rest));
  }
  IndexSet all;
  for (std::size_t k = 0; k < n; ++k) all.push_back(static_cast<int>(k));
  const Subspace w = wandering_subspace(m, all);
  rep.wandering_dim = w.dim();
  {
    const CMatrix pw_full = w.projector();
    double lemma = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const CMatrix d = (pw_full - w_without[j].projector()) * m.shifts[j] * f.pqw;
      lemma = std::max(lemma, spectral_norm(d));
    }
    add("wandering_projection", lemma);
  }

  // Minimal reduction: the smallest coefficient space carrying the quotient.
  const HardySpace& sp = m.space;
  Subspace coeff_space = Subspace::zero(sp.coeff_dim());
  {
    std::vector<CMatrix> parts;
    for (std::size_t c = 0; c < m.quotient.dim(); ++c)
      parts.push_back(coefficient_columns(sp, m.quotient.basis.col(c)));
    if (!parts.empty()) coeff_space = span(hstack(parts), tol);
  }
  rep.coefficient_dim = coeff_space.dim();
  rep.minimal = coeff_space.dim() == sp.coeff_dim();
  rep.constant_meet_dim = intersect(m.submodule, constants(sp), tol).dim();
  add("minimality_equivalence",
      rep.minimal == (rep.constant_meet_dim == 0) ? 0.0 : 1.0);
  const Subspace reduced_space =
      embed(kron(CMatrix::identity(sp.monomial_count()), coeff_space.basis),
            Subspace::whole(sp.monomial_count() * coeff_space.dim()));
  const Subspace w_reduced = intersect(w, reduced_space, tol);
  rep.wandering_dim_reduced = w_reduced.dim();

  {
    std::vector<CMatrix> gens;
    for (std::size_t j = 0; j < n; ++j)
      gens.push_back(w_without[j].projector() * m.shifts[j] * f.qw.basis);
    const Subspace generated = span(hstack(gens), tol);
    // Generators reach one degree past the window, so compare by
    // containment in both directions rather than by equality.
    const Subspace target = intersect(w_reduced, f.window, tol);
    add("wandering_generation",
        std::max(containment_residual(generated.basis, w_reduced),
                 containment_residual(target.basis, generated)));
  }

  {
    std::vector<CMatrix> xs;
    const CMatrix pw_full = w.projector();
    for (std::size_t j = 0; j < n; ++j) xs.push_back(pw_full * m.shifts[j] * f.b);
    const CMatrix x = hstack(xs);
    add("wandering_gram", spectral_norm(qmask_n * (adj_mul(x, x) - joint) * qmask_n));
    rep.defect_dim = range_basis(joint_w, tol).dim();
    add("wandering_dimension",
        std::abs(static_cast<double>(rep.defect_dim) -
                 static_cast<double>(rep.wandering_dim_reduced)));
  }

  // Fully truncated defect spaces against backward shifts of Theta E.
  if (m.symbol) {
    const HardySpace in(sp.n(), 0, m.symbol->input_dim());
    const CMatrix theta_e = symbol_matrix(in, sp, m.symbol->coefficients(sp.degree()));
    double dist = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const CMatrix dj = full_truncated_defect(f.tuple, static_cast<int>(j));
      const Subspace range_q = window_range(f, dj);
      const Subspace lhs = embed(f.b, range_q);
      const Subspace rhs = span(f.pqw * m.shifts[j].adjoint() * theta_e, tol);
      dist = std::max(dist, subspace_distance(lhs, rhs));
    }
    add("defect_space_generators", dist);
  }

  // Layers of wandering subspaces.
  if (n >= 2) {
    double layer = 0.0;
    double invariance = 0.0;
    const CMatrix pw = f.window.projector();
    const std::size_t full = (std::size_t{1} << n) - 1;
    for (std::size_t mask = 1; mask < full; ++mask) {
      IndexSet p;
      for (std::size_t k = 0; k < n; ++k)
        if (mask & (std::size_t{1} << k)) p.push_back(static_cast<int>(k));
      const Subspace wp = wandering_subspace(m, p);
      const Subspace wp_low = intersect(wp, f.window, tol);
      for (std::size_t j = 0; j < n; ++j) {
        if (mask & (std::size_t{1} << j)) continue;
        const Subspace low = minus(wp, top_degree(sp, j), tol);
        const Subspace shifted = span(m.shifts[j] * low.basis, tol);
        const Subspace peeled = minus(wp, shifted, tol);
        IndexSet pj = p;
        pj.push_back(static_cast<int>(j));
        std::sort(pj.begin(), pj.end());
        const Subspace next = wandering_subspace(m, pj);
        layer = std::max(layer, masked_norm(pw, peeled.projector() - next.projector()));
        invariance = std::max(invariance, shift_escape(m, j, wp_low.basis, wp));
      }
    }
    add("wandering_layers", layer);
    add("wandering_shift_invariance", invariance);
  }
  return rep;
}

BeurlingBattery beurling_condition_battery(const QuotientModel& m, int margin) {
  const Frame f(m, margin);
  const std::size_t n = f.n;
  const std::size_t q = f.b.cols();
  const CMatrix id_q = CMatrix::identity(q);
  std::vector<CMatrix> sq;
  for (std::size_t i = 0; i < n; ++i)
    sq.push_back(hermitian_part(id_q - adj_mul(f.tuple.op(i), f.tuple.op(i))));
  BeurlingBattery out;
  for (std::size_t j = 0; j < n; ++j) {
    const Subspace dj_window = window_range(f, sq[j]);
    const Subspace dj_full = embed(f.b, range_basis(sq[j], m.tol));
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      out.product_residual =
          std::max(out.product_residual, spectral_norm(f.masked_q(sq[i] * sq[j])));
      const CMatrix& ci = f.tuple.op(i);
      out.isometry_residual = std::max(
          out.isometry_residual,
          spectral_norm(congruence(dj_window.basis.adjoint(), adj_mul(ci, ci) - id_q)));
      out.invariance_residual = std::max(
          out.invariance_residual,
          shift_escape(m, i, f.b * dj_window.basis, dj_full));
    }
  }
  return out;
}

}  // namespace polydisc
