// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#include "polydisc/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

#include "polydisc/charfn.hpp"
#include "polydisc/error.hpp"

namespace polydisc {

namespace {

using gen::Rng;

struct Ctx {
  const Tolerances& tol;
  std::uint64_t seed;
  CriterionResult& out;

  void check(std::string name, double value, double threshold) {
    out.checks.push_back(make_check(std::move(name), value, threshold));
  }
  void floor(std::string name, double value, double threshold) {
    out.checks.push_back(make_floor_check(std::move(name), value, threshold));
  }
  void metric(std::string name, double value) { out.metrics.emplace_back(std::move(name), value); }
};

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

double unitarity(const CMatrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  const CMatrix id = CMatrix::identity(u.rows());
  return std::max(spectral_norm(adj_mul(u, u) - id), spectral_norm(mul_adj(u, u) - id));
}

// The 200 random pure contractions shared by the one-variable criteria.
std::vector<CTuple> onevar_family(std::uint64_t seed, const Tolerances& tol) {
  Rng rng(seed);
  std::vector<CTuple> out;
  for (std::size_t k = 0; k < 200; ++k)
    out.push_back(validate({gen::random_pure_contraction(rng, 1 + k % 8, 0.95)}, tol));
  return out;
}

void onevar_reduction(Ctx& c) {
  Rng points(c.seed ^ 0x5bd1e995ULL);
  double aligned = 0.0;
  double singular = 0.0;
  double alignment = 0.0;
  for (const CTuple& t : onevar_family(c.seed, c.tol)) {
    const CharFn f = build_charfn(t);
    const DefectRoot in = classical_defect(t.op(0), c.tol);
    const DefectRoot out = classical_defect_adjoint(t.op(0), c.tol);
    const CMatrix ui = adj_mul(f.input_basis().basis, in.space.basis);
    const CMatrix uo = adj_mul(f.output_basis().basis, out.space.basis);
    alignment = std::max({alignment, unitarity(ui), unitarity(uo)});
    for (int k = 0; k < 25; ++k) {
      const cplx w = gen::point_in_disc(points, 0.95);
      const CMatrix a = f.eval(std::vector<cplx>{w});
      const CMatrix b = eval_onevar(t, w);
      aligned = std::max(aligned, spectral_norm(a - uo * mul_adj(b, ui)));
      singular = std::max(singular, max_abs_diff(singular_values(a), singular_values(b)));
    }
  }
  c.check("aligned_difference", aligned, 1e-9);
  c.check("singular_value_difference", singular, 1e-9);
  c.check("basis_alignment_unitarity", alignment, 1e-10);
  c.metric("tuples", 200);
  c.metric("points_per_tuple", 25);
}

void blaschke_recovery(Ctx& c) {
  Rng rng(c.seed);
  double worst = 0.0;
  double at_zero = 0.0;
  for (cplx a : {cplx(0.3, 0.0), cplx(0.5, 0.2), cplx(-0.7, 0.0)}) {
    const CharFn f = build_charfn(validate({CMatrix{{a}}}, c.tol));
    at_zero = std::max(at_zero, std::abs(f.eval(std::vector<cplx>{0.0})(0, 0) + a));
    for (int k = 0; k < 50; ++k) {
      const cplx w = gen::point_in_disc(rng, 0.95);
      const cplx expected = (w - a) / (1.0 - std::conj(a) * w);
      worst = std::max(worst, std::abs(f.eval(std::vector<cplx>{w})(0, 0) - expected));
    }
  }
  c.check("scalar_blaschke_difference", worst, 1e-12);
  c.check("value_at_origin", at_zero, 1e-12);
}

void inner_onevar(Ctx& c, std::uint64_t family_seed) {
  Rng points(c.seed);
  double inner = 0.0;
  double excess = 0.0;
  for (const CTuple& t : onevar_family(family_seed, c.tol)) {
    const CharFn f = build_charfn(t);
    inner = std::max(inner, inner_residual(f, 64).residual);
    const auto pts = interior_points(points, 1, 25, 0.999);
    excess = std::max(excess, contractivity_excess(f, pts));
  }
  c.check("torus_inner_residual", inner, 1e-8);
  c.check("contractivity_excess", excess, 1e-8);
}

void pair_form_identity(Ctx& c) {
  Rng rng(c.seed);
  double worst = 0.0;
  int szego = 0;
  for (std::size_t k = 0; k < 100; ++k) {
    const std::size_t size = 1 + (k / 2) % 6;
    const CTuple t = k % 2 == 0 ? gen::triangular_pair(rng, size, 0.9, c.tol)
                                : gen::kernel_node_tuple(rng, 2, size, 0.8, c.tol);
    // The identity holds for any left factor; use D_{T*} when it exists.
    CMatrix left = CMatrix::identity(t.dim());
    if (classify(t).szego) {
      left = defect_first_kind(t).op;
      ++szego;
    }
    const CMatrix inputs = CMatrix::identity(2 * t.dim());
    for (int p = 0; p < 20; ++p) {
      const auto w = gen::point_in_polydisc(rng, 2, 0.95);
      worst = std::max(worst, spectral_norm(eval_raw(t, left, w, inputs) -
                                            eval_pair_blaschke(t, left, w, inputs)));
    }
  }
  c.check("pair_form_difference", worst, 1e-11);
  c.metric("pairs", 100);
  c.metric("pairs_with_szego_defect", szego);
}

// Pseudo-hyperbolic distance.
double rho(cplx a, cplx b) { return std::abs((a - b) / (1.0 - std::conj(a) * b)); }

void unitary_invariance(Ctx& c) {
  Rng rng(c.seed);
  double forward = 0.0;
  double unit = 0.0;
  double swap = 0.0;
  for (std::size_t k = 0; k < 50; ++k) {
    std::vector<cplx> nodes;
    for (std::size_t l = 0; l < 1 + k % 3; ++l) nodes.push_back(gen::point_in_disc(rng, 0.7));
    const auto model = gen::node_shift_model(nodes, 2 + k % 3, c.tol);
    const CMatrix sigma = gen::haar_unitary(rng, model.tuple.dim());
    const auto pts = interior_points(rng, 2, 20, 0.9);
    const auto there = coincidence_from_unitary(model.tuple, sigma, pts, model.mask);
    const auto back = coincidence_from_unitary(there.conjugated, sigma.adjoint(), pts,
                                               model.mask.transported(sigma));
    forward = std::max(forward, there.coincidence.residual);
    unit = std::max({unit, there.coincidence.tau_unitarity, there.coincidence.tau_star_unitarity});
    swap = std::max(swap, std::abs(there.coincidence.residual - back.coincidence.residual));
  }
  c.check("constructive_residual", forward, 1e-9);
  c.check("tau_unitarity", unit, 1e-10);
  c.check("swap_symmetry", swap, 1e-10);

  // Distinct zero sets: some zero of B is pseudo-hyperbolically far from
  // every zero of A, so |Theta_A| is bounded below there while Theta_B = 0.
  double weakest = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < 10; ++k) {
    const std::size_t m = 1 + k % 3;
    const std::size_t degree = 2 + k % 2;
    std::vector<cplx> a;
    std::vector<cplx> b;
    for (std::size_t l = 0; l < m; ++l) a.push_back(gen::point_in_disc(rng, 0.7));
    for (;;) {
      b.clear();
      for (std::size_t l = 0; l < m; ++l) b.push_back(gen::point_in_disc(rng, 0.7));
      const bool far = std::any_of(b.begin(), b.end(), [&](cplx z) {
        return std::all_of(a.begin(), a.end(), [&](cplx y) { return rho(y, z) >= 0.5; });
      });
      if (far) break;
    }
    const auto ma = gen::node_shift_model(a, degree, c.tol);
    const auto mb = gen::node_shift_model(b, degree, c.tol);
    auto pts = interior_points(rng, 2, 20, 0.9);
    for (cplx z : a) pts.push_back({z, 0.3});
    for (cplx z : b) pts.push_back({z, 0.3});
    weakest = std::min(weakest, best_alignment_residual(build_charfn(ma.tuple, ma.mask),
                                                        build_charfn(mb.tuple, mb.mask),
                                                        pts, rng, 50));
  }
  c.floor("falsification_min_residual", weakest, 0.1);
  c.metric("conjugations", 50);
  c.metric("falsification_probes", 10);
}

void positivity_battery(Ctx& c) {
  Rng rng(c.seed);
  double szego = 0.0;
  double comm = 0.0;
  for (std::size_t k = 0; k < 500; ++k) {
    const CTuple t = gen::kernel_node_tuple(rng, 2 + k % 2, 1 + k % 12, 0.8, c.tol);
    szego = std::min(szego, min_eigenvalue(szego_inverse(t), c.tol));
    comm = std::min(comm, commutator_defect(t).min_eig);
  }
  c.floor("szego_inverse_min_eigenvalue", szego, -1e-10);
  c.floor("commutator_defect_min_eigenvalue", comm, -1e-10);
  c.metric("tuples", 500);
}

std::vector<std::pair<std::string, InnerSymbol>> model_symbols() {
  return {{"z1", InnerSymbol::monomial({1, 0})},
          {"z1z2", InnerSymbol::monomial({1, 1})},
          {"z1^2z2", InnerSymbol::monomial({2, 1})},
          {"diag(z1z2,1)", InnerSymbol::block_diag({InnerSymbol::monomial({1, 1}),
                                                    InnerSymbol::unitary(2, CMatrix{{1.0}})})}};
}

void windowed_model_suite(Ctx& c) {
  Rng rng(c.seed);
  constexpr int kMargin = 1;
  std::map<std::string, double> structural;
  double dims = 0.0;
  double psd = 0.0;
  double dominance = 0.0;
  double recovery = 0.0;
  double isometry = 0.0;
  for (const auto& [name, theta] : model_symbols()) {
    for (int degree : {4, 6, 8}) {
      const QuotientModel m = quotient_model(degree, theta, c.tol);
      const StructuralReport rep = structural_checks(m, kMargin);
      for (const auto& chk : rep.checks) {
        auto [it, fresh] = structural.try_emplace(chk.name, chk.value);
        if (!fresh) it->second = std::max(it->second, chk.value);
      }
      dims = std::max(dims, std::abs(static_cast<double>(rep.wandering_dim_reduced) -
                                     static_cast<double>(rep.defect_dim)));

      const CTuple t = model_tuple(m);
      const WindowMask mask = quotient_mask(m, kMargin);
      const CMatrix p = mask.block_repeat(t.n());
      const CMatrix joint = hermitian_part(p * joint_defect_square(t) * p);
      const CMatrix comm = hermitian_part(p * commutator_defect(t).square * p);
      psd = std::min(psd, min_eigenvalue(joint, c.tol));
      dominance = std::min(dominance, loewner_leq(joint, comm, c.tol).witness_min_eig);

      const CharFn f = build_charfn(t, mask);
      const auto pts = interior_points(rng, 2, 20, 0.9);
      const SymbolRecovery r = recover_symbol(m, f, pts);
      recovery = std::max(recovery, r.residual);
      isometry = std::max({isometry, r.tau_isometry, r.tau_star_isometry});
    }
  }
  for (const auto& [name, value] : structural) c.check("structural." + name, value, 1e-8);
  c.check("wandering_dim_minus_defect_dim", dims, 0.0);
  c.floor("joint_defect_min_eigenvalue", psd, -1e-10);
  c.floor("commutator_dominance_min_eigenvalue", dominance, -1e-10);
  c.check("symbol_recovery_residual", recovery, 1e-8);
  c.check("recovery_isometry", isometry, 1e-8);
  c.metric("models", 12);
}

void ahern_clark(Ctx& c) {
  struct Case {
    InnerSymbol theta;
    std::function<std::size_t(int)> closed;
  };
  const std::vector<Case> cases{
      {InnerSymbol::monomial({1, 0}), [](int n) { return static_cast<std::size_t>(n + 1); }},
      {InnerSymbol::monomial({1, 1}), [](int n) { return static_cast<std::size_t>(2 * n + 1); }},
      {InnerSymbol::monomial({2, 1}), [](int n) { return static_cast<std::size_t>(3 * n + 1); }},
      {InnerSymbol::monomial({0, 3}), [](int n) { return static_cast<std::size_t>(3 * (n + 1)); }}};
  double violations = 0.0;
  double mismatch = 0.0;
  for (const auto& cs : cases) {
    const auto dims = ahern_clark_growth(cs.theta, 2, 10, c.tol);
    for (std::size_t k = 1; k < dims.size(); ++k)
      if (dims[k] <= dims[k - 1]) violations += 1.0;
    for (std::size_t k = 0; k < dims.size(); ++k)
      mismatch = std::max(mismatch, std::abs(static_cast<double>(dims[k]) -
                                             static_cast<double>(cs.closed(2 + static_cast<int>(k)))));
  }
  c.check("non_increasing_steps", violations, 0.0);
  c.check("closed_form_mismatch", mismatch, 0.0);
}

void series_expansions(Ctx& c) {
  Rng rng(c.seed);
  double nil = 0.0;
  double node = 0.0;
  for (std::size_t k = 0; k < 100; ++k) {
    const std::size_t n = 2 + k % 2;
    const bool nilpotent = k < 50;
    const CTuple t = nilpotent ? gen::nilpotent_tuple(rng, n, 2 + k % 5, c.tol)
                               : gen::kernel_node_tuple(rng, n, 1 + k % 6, 0.7, c.tol);
    const int cutoff = default_series_cutoff(t, 1e-15);
    double& worst = nilpotent ? nil : node;
    for (int j = 0; j < static_cast<int>(n); ++j)
      for (const auto& p : subsets_without(n, j))
        worst = std::max(worst, defect_series_residual(t, j, p, cutoff));
  }
  c.check("nilpotent_series_residual", nil, 1e-12);
  c.check("kernel_node_series_residual", node, 1e-10);
}

void dilation_battery(Ctx& c) {
  Rng rng(c.seed);
  double iso = 0.0;
  double inter = 0.0;
  double minimal = 0.0;
  double model = 0.0;
  double tail = 0.0;
  for (std::size_t k = 0; k < 100; ++k) {
    const CTuple t = gen::kernel_node_tuple(rng, 1 + k % 2, 1 + k % 6, 0.8, c.tol);
    const DilationDefects d = dilation_defects(build_dilation(t));
    iso = std::max(iso, d.isometry - d.tail_bound);
    inter = std::max(inter, d.intertwining);
    minimal = std::max(minimal, d.minimality);
    model = std::max(model, d.model_equivalence - d.tail_bound);
    tail = std::max(tail, d.tail_bound);
  }
  c.check("isometry_over_tail", iso, 1e-10);
  c.check("intertwining", inter, 1e-10);
  c.check("minimality", minimal, 1e-8);
  c.check("model_equivalence_over_tail", model, 1e-10);
  c.metric("largest_tail_bound", tail);
}

void dilation_form(Ctx& c) {
  Rng rng(c.seed);
  std::vector<CTuple> cases;
  for (cplx a : {cplx(0.3, 0.0), cplx(0.5, 0.2), cplx(-0.7, 0.0), cplx(0.0, 0.0)})
    cases.push_back(validate({CMatrix{{a}}}, c.tol));
  for (std::size_t k = 0; k < 10; ++k)
    cases.push_back(validate({gen::random_pure_contraction(rng, 1 + k % 4, 0.9)}, c.tol));
  for (int degree : {3, 4})
    for (const auto& theta : {InnerSymbol::monomial({1, 0}), InnerSymbol::monomial({1, 1})})
      cases.push_back(model_tuple(quotient_model(degree, theta, c.tol)));
  for (std::size_t degree = 1; degree <= 4; ++degree)
    cases.push_back(gen::truncated_bishift(degree, c.tol));
  for (std::size_t k = 0; k < 5; ++k) {
    std::vector<cplx> nodes;
    for (std::size_t l = 0; l < 1 + k % 2; ++l) nodes.push_back(gen::point_in_disc(rng, 0.6));
    cases.push_back(gen::node_shift_model(nodes, 2, c.tol).tuple);
  }
  double worst = 0.0;
  for (const auto& t : cases) worst = std::max(worst, dilation_form_residual(t, build_dilation(t)));
  c.check("coefficient_mismatch", worst, 1e-11);
  c.metric("tuples", static_cast<double>(cases.size()));
}

struct Entry {
  const char* name;
  double budget;
  std::function<void(Ctx&)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {"onevar_reduction", 10.0, onevar_reduction},
      {"blaschke_recovery", 0.0, blaschke_recovery},
      {"inner_onevar", 0.0, nullptr},
      {"pair_form_identity", 10.0, pair_form_identity},
      {"unitary_invariance", 0.0, unitary_invariance},
      {"positivity_battery", 0.0, positivity_battery},
      {"windowed_model_suite", 0.0, windowed_model_suite},
      {"ahern_clark_growth", 0.0, ahern_clark},
      {"series_expansions", 0.0, series_expansions},
      {"dilation_battery", 30.0, dilation_battery},
      {"dilation_form", 0.0, dilation_form}};
  return entries;
}

}  // namespace

std::uint64_t criterion_seed(std::uint64_t master, int id) {
  // splitmix64 of the master seed offset by the criterion id
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(id);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

CriterionResult run_criterion(int id, const SuiteConfig& config) {
  if (id < 1 || id > kSuiteCriteria) {
    throw Error(ErrorCode::InvalidArgument, "unknown criterion", {.i = id - 1});
  }
  const Entry& e = registry()[static_cast<std::size_t>(id - 1)];
  CriterionResult out;
  out.id = id;
  out.name = e.name;
  out.budget_seconds = e.budget;
  Ctx ctx{config.tol, criterion_seed(config.seed, id), out};
  const auto start = std::chrono::steady_clock::now();
  try {
    config.tol.validate();
    if (id == 3) {
      inner_onevar(ctx, criterion_seed(config.seed, 1));
    } else {
      e.run(ctx);
    }
  } catch (const std::exception& ex) {
    out.error = ex.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.pass = out.error.empty() && !out.checks.empty() && all_pass(out.checks);
  return out;
}

SuiteReport run_suite(const SuiteConfig& config) {
  SuiteReport rep;
  for (int id = 1; id <= kSuiteCriteria; ++id) {
    if (!config.only.empty() &&
        std::find(config.only.begin(), config.only.end(), id) == config.only.end())
      continue;
    rep.criteria.push_back(run_criterion(id, config));
  }
  rep.all_pass = !rep.criteria.empty() &&
                 std::all_of(rep.criteria.begin(), rep.criteria.end(),
                             [](const CriterionResult& r) { return r.pass; });
  return rep;
}

}  // namespace polydisc
