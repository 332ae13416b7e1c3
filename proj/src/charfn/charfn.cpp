// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#include "polydisc/charfn.hpp"

#include <algorithm>
#include <cmath>

#include "polydisc/error.hpp"

namespace polydisc {

namespace {

CMatrix resolvent_base(const CMatrix& adj, cplx w) {
  CMatrix r = CMatrix::identity(adj.rows());
  r -= w * adj;
  return r;
}

CMatrix solve_resolvent(const CMatrix& r, const CMatrix& b, std::size_t k) {
  try {
    return lu_solve(r, b);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularResolvent) throw;
    throw Error(ErrorCode::SingularResolvent, "resolvent not invertible",
                {.i = static_cast<int>(k), .value = e.info().value});
  }
}

void require_point(const CTuple& t, std::span<const cplx> w, const CMatrix& htilde) {
  if (w.size() != t.n()) {
    throw Error(ErrorCode::ShapeMismatch, "point has the wrong number of coordinates");
  }
  if (htilde.rows() != t.n() * t.dim()) {
    throw Error(ErrorCode::ShapeMismatch, "input vector must have n*dim rows");
  }
}

}  // namespace

CMatrix eval_raw(const CTuple& t, const CMatrix& d_tstar, std::span<const cplx> w,
                 const CMatrix& htilde) {
  require_point(t, w, htilde);
  const std::size_t n = t.n();
  const std::size_t d = t.dim();
  const std::size_t m = htilde.cols();
  std::vector<CMatrix> res;
  res.reserve(n);
  for (std::size_t k = 0; k < n; ++k) res.push_back(resolvent_base(t.adjoints()[k], w[k]));

  CMatrix acc(d, m);
  for (std::size_t j = 0; j < n; ++j) {
    CMatrix x = htilde.block(j * d, 0, d, m);
    for (std::size_t i = 0; i < n; ++i)
      if (i != j) x = res[i] * x;
    CMatrix y = w[j] * x;
    y -= t.op(j) * x;
    acc += y;
  }
  for (std::size_t k = 0; k < n; ++k) acc = solve_resolvent(res[k], acc, k);
  return d_tstar * acc;
}

CMatrix operator_blaschke(const CMatrix& x, cplx z) {
  CMatrix num = z * CMatrix::identity(x.rows());
  num -= x;
  return solve_resolvent(resolvent_base(x.adjoint(), z), num, 0);
}

CMatrix eval_pair_blaschke(const CTuple& t, const CMatrix& d_tstar,
                           std::span<const cplx> w, const CMatrix& htilde) {
  if (t.n() != 2) throw Error(ErrorCode::InvalidArgument, "pair form needs n = 2");
  require_point(t, w, htilde);
  const std::size_t d = t.dim();
  const std::size_t m = htilde.cols();
  // b_{(X,Y)}(a, b) h = (I - a X^*)^{-1} b_Y(b) (I - a X^*) h
  auto joint = [&](std::size_t first, std::size_t second, const CMatrix& h) {
    const CMatrix r = resolvent_base(t.adjoints()[first], w[first]);
    const CMatrix inner = operator_blaschke(t.op(second), w[second]);
    return solve_resolvent(r, inner * (r * h), first);
  };
  const CMatrix h1 = htilde.block(0, 0, d, m);
  const CMatrix h2 = htilde.block(d, 0, d, m);
  return d_tstar * (joint(0, 1, h2) + joint(1, 0, h1));
}

CharFn build_charfn(const CTuple& t, const std::optional<WindowMask>& mask) {
  const BeurlingVerdict v = is_beurling(t, mask);
  if (!v.holds) {
    const char* why = !v.pure    ? "tuple is not pure"
                      : !v.szego ? "Szego inverse is not positive"
                                 : "classical defects are not orthogonal";
    throw Error(ErrorCode::NotBeurling, why,
                {.i = v.worst_i, .j = v.worst_j, .value = v.residual});
  }
  auto s = std::make_shared<CharFn::State>(
      CharFn::State{t, build_defect_package(t), mask, {}, {}, {}, {}, {}});
  CMatrix joint = s->defects.joint.square;
  if (mask) {
    const CMatrix p = mask->block_repeat(t.n());
    joint = hermitian_part(p * joint * p);
  }
  PsdRoot root;
  try {
    root = psd_root(joint, t.tol());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotPsd) throw;
    throw Error(ErrorCode::NotBeurling, "joint defect is not positive",
                {.value = e.info().value});
  }
  s->input = root.range;
  s->input_eigs.assign(root.eigenvalues.begin(),
                       root.eigenvalues.begin() + static_cast<std::ptrdiff_t>(root.range.dim()));
  s->joint_root = root.root;
  s->preimages = psd_root_pinv(root) * root.range.basis;
  s->output = s->defects.first_kind.space;
  return CharFn(std::move(s));
}

CMatrix CharFn::eval(std::span<const cplx> w) const {
  const CMatrix raw = eval_raw(s_->tuple, s_->defects.first_kind.op, w, s_->preimages);
  return adj_mul(s_->output.basis, raw);
}

CMatrix eval_onevar(const CTuple& t, cplx w) {
  if (t.n() != 1) throw Error(ErrorCode::InvalidArgument, "one-variable form needs n = 1");
  const CMatrix& x = t.op(0);
  const DefectRoot in = classical_defect(x, t.tol());
  const DefectRoot out = classical_defect_adjoint(x, t.tol());
  const CMatrix& bi = in.space.basis;
  CMatrix val = -(x * bi);
  const CMatrix r = resolvent_base(x.adjoint(), w);
  val += w * (out.op * solve_resolvent(r, in.op * bi, 0));
  return adj_mul(out.space.basis, val);
}

InnerResidual inner_residual(const CharFn& f, std::span<const Point> grid) {
  InnerResidual out;
  const CMatrix id = CMatrix::identity(f.input_dim());
  for (const auto& z : grid) {
    const CMatrix m = f.eval(z);
    const double r = spectral_norm(adj_mul(m, m) - id);
    if (r > out.residual || out.worst_point.empty()) {
      out.residual = r;
      out.worst_point = z;
    }
  }
  return out;
}

InnerResidual inner_residual(const CharFn& f, int per_axis) {
  const auto grid = torus_grid(f.n(), per_axis);
  return inner_residual(f, std::span<const Point>(grid));
}

double contractivity_excess(const CharFn& f, std::span<const Point> points) {
  double worst = 0.0;
  for (const auto& w : points) worst = std::max(worst, spectral_norm(f.eval(w)) - 1.0);
  return worst;
}

namespace {

// Grid size per axis making aliased Taylor terms negligible: beyond the
// dilation box and past the point where every T_i^m has vanished.
int alias_free_grid(const CTuple& t, int degree) {
  const int cap = t.n() == 1 ? 4096 : t.n() == 2 ? 192 : 48;
  std::vector<CMatrix> power(t.n(), CMatrix::identity(t.dim()));
  int m = 0;
  while (m < cap) {
    double worst = 0.0;
    for (const auto& p : power) worst = std::max(worst, spectral_norm(p));
    if (worst <= 1e-17) break;
    for (std::size_t i = 0; i < t.n(); ++i) power[i] = power[i] * t.op(i);
    ++m;
  }
  return std::clamp(std::max(degree + 2, m + 1), 4, cap);
}

}  // namespace

double dilation_form_residual(const CTuple& t, const Dilation& d) {
  const std::size_t n = t.n();
  const std::size_t dim = t.dim();
  const HardySpace& space = d.space;
  const std::size_t rank = space.coeff_dim();

  std::vector<CMatrix> parts;
  for (std::size_t i = 0; i < n; ++i) {
    CMatrix x = apply_shift(space, i, d.embedding) - d.embedding * t.op(i);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) x -= apply_shift(space, j, x) * t.adjoints()[j];
    parts.push_back(std::move(x));
  }
  const CMatrix from_dilation = hstack(parts);

  const int g = alias_free_grid(t, d.degree);
  const CMatrix all_inputs = CMatrix::identity(n * dim);
  std::vector<CMatrix> samples;
  for (const auto& z : torus_grid(n, g))
    samples.push_back(adj_mul(d.output_basis, eval_raw(t, d.defect, z, all_inputs)));
  const auto coeffs = torus_taylor_coefficients(n, g, samples);

  double worst = 0.0;
  for (std::size_t a = 0; a < space.monomial_count(); ++a) {
    const CMatrix& c = coeffs.at(space.monomial(a));
    const CMatrix block = from_dilation.block(space.position(a, 0), 0, rank, n * dim);
    worst = std::max(worst, spectral_norm(c - block));
  }
  return worst;
}

InnerSymbol inner_block_compose(const CharFn& f, std::size_t extra_dim) {
  const std::size_t out = f.output_dim() + extra_dim;
  const std::size_t in = f.input_dim() + extra_dim;
  return InnerSymbol::sampled(f.n(), out, in, [f, extra_dim](std::span<const cplx> z) {
    const CMatrix theta = f.eval(z);
    if (extra_dim == 0) return theta;
    const std::vector<CMatrix> blocks{theta, CMatrix::identity(extra_dim)};
    return block_diagonal(blocks);
  });
}

std::vector<Point> interior_points(gen::Rng& rng, std::size_t n, std::size_t count,
                                   double radius) {
  std::vector<Point> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(gen::point_in_polydisc(rng, n, radius));
  return out;
}

}  // namespace polydisc
