// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#include "polydisc/tuple.hpp"

#include <algorithm>
#include <cmath>

#include "polydisc/error.hpp"

namespace polydisc {

WindowMask WindowMask::full(std::size_t dim) {
  return {CMatrix::identity(dim)};
}

WindowMask WindowMask::from_subspace(const Subspace& s) {
  return {s.projector()};
}

WindowMask WindowMask::transported(const CMatrix& u) const {
  return {congruence(u, projection)};
}

CMatrix WindowMask::block_repeat(std::size_t n) const {
  std::vector<CMatrix> blocks(n, projection);
  return block_diagonal(blocks);
}

CTuple validate(std::vector<CMatrix> matrices, const Tolerances& tol) {
  tol.validate();
  if (matrices.empty()) {
    throw Error(ErrorCode::ShapeMismatch, "tuple needs at least one operator");
  }
  const std::size_t d = matrices.front().rows();
  if (d == 0) throw Error(ErrorCode::ShapeMismatch, "dimension must be >= 1");
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    const auto& m = matrices[i];
    if (!m.is_square()) {
      throw Error(ErrorCode::NotSquare, "operator is not square",
                  {.i = static_cast<int>(i)});
    }
    if (m.rows() != d) {
      throw Error(ErrorCode::ShapeMismatch, "operators differ in dimension",
                  {.i = static_cast<int>(i)});
    }
    if (!m.all_finite()) {
      throw Error(ErrorCode::InvalidArgument, "non-finite entry",
                  {.i = static_cast<int>(i)});
    }
  }
  for (std::size_t i = 0; i < matrices.size(); ++i)
    for (std::size_t j = i + 1; j < matrices.size(); ++j) {
      const double r = spectral_norm(commutator(matrices[i], matrices[j]));
      if (r > tol.structural) {
        throw Error(ErrorCode::NotCommuting, "operators do not commute",
                    {static_cast<int>(i), static_cast<int>(j), r});
      }
    }
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    const double nrm = spectral_norm(matrices[i]);
    if (nrm > 1.0 + tol.structural) {
      throw Error(ErrorCode::NotContraction, "norm exceeds one",
                  {.i = static_cast<int>(i), .value = nrm});
    }
  }
  CTuple t;
  t.dim_ = d;
  t.tol_ = tol;
  t.adj_.reserve(matrices.size());
  for (const auto& m : matrices) t.adj_.push_back(m.adjoint());
  t.ops_ = std::move(matrices);
  return t;
}

CTuple conjugate(const CTuple& t, const CMatrix& sigma) {
  if (sigma.rows() != t.dim() || sigma.cols() != t.dim()) {
    throw Error(ErrorCode::IncompatibleDims, "unitary has the wrong size");
  }
  std::vector<CMatrix> ops;
  ops.reserve(t.n());
  for (const auto& m : t.ops()) ops.push_back(congruence(sigma, m));
  return validate(std::move(ops), t.tol());
}

PurityReport is_pure(const CTuple& t) {
  PurityReport r;
  r.pure = true;
  for (const auto& m : t.ops()) {
    const double rho = spectral_radius(m);
    r.spectral_radii.push_back(rho);
    if (rho > 1.0 - t.tol().pure) r.pure = false;
  }
  return r;
}

CMatrix szego_inverse(const CTuple& t) {
  const std::size_t n = t.n();
  CMatrix acc(t.dim(), t.dim());
  for (std::size_t subset = 0; subset < (std::size_t{1} << n); ++subset) {
    CMatrix tk = CMatrix::identity(t.dim());
    int size = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (subset & (std::size_t{1} << i)) {
        tk = tk * t.op(i);
        ++size;
      }
    const CMatrix term = mul_adj(tk, tk);
    if (size % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return hermitian_part(acc);
}

CMatrix szego_inverse_iterated(const CTuple& t) {
  CMatrix x = CMatrix::identity(t.dim());
  for (std::size_t i = 0; i < t.n(); ++i) x -= congruence(t.op(i), x);
  return hermitian_part(x);
}

namespace {

DefectRoot root_of(const CMatrix& square, const Tolerances& tol) {
  PsdRoot r = psd_root(square, tol);
  return {square, std::move(r.root), std::move(r.range),
          std::move(r.eigenvalues)};
}

}  // namespace

DefectRoot defect_first_kind(const CTuple& t) {
  const CMatrix s = szego_inverse(t);
  try {
    return root_of(s, t.tol());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotPsd) throw;
    throw Error(ErrorCode::NotSzego, "Szego inverse is not positive",
                {.value = e.info().value});
  }
}

DefectRoot classical_defect(const CMatrix& x, const Tolerances& tol) {
  const CMatrix sq =
      hermitian_part(CMatrix::identity(x.cols()) - adj_mul(x, x));
  return root_of(sq, tol);
}

DefectRoot classical_defect_adjoint(const CMatrix& x, const Tolerances& tol) {
  const CMatrix sq =
      hermitian_part(CMatrix::identity(x.rows()) - mul_adj(x, x));
  return root_of(sq, tol);
}

namespace {

bool szego_holds(const CTuple& t, double* min_eig) {
  const auto ev = herm_eigenvalues(szego_inverse(t), t.tol());
  *min_eig = ev.empty() ? 0.0 : ev.back();
  double scale = 1.0;
  if (!ev.empty()) scale = std::max({scale, std::abs(ev.front()), std::abs(ev.back())});
  return *min_eig >= -t.tol().psd_clamp * scale;
}

}  // namespace

BeurlingVerdict is_beurling(const CTuple& t,
                            const std::optional<WindowMask>& mask) {
  BeurlingVerdict v;
  v.masked = mask.has_value();
  if (mask && mask->dim() != t.dim()) {
    throw Error(ErrorCode::IncompatibleDims, "mask dimension");
  }
  std::vector<CMatrix> roots;
  roots.reserve(t.n());
  for (const auto& m : t.ops()) roots.push_back(classical_defect(m, t.tol()).op);
  for (std::size_t i = 0; i < t.n(); ++i)
    for (std::size_t j = i + 1; j < t.n(); ++j) {
      CMatrix p = roots[i] * roots[j];
      if (mask) p = mask->projection * p * mask->projection;
      const double r = spectral_norm(p);
      if (r > v.residual || v.worst_i < 0) {
        v.residual = r;
        v.worst_i = static_cast<int>(i);
        v.worst_j = static_cast<int>(j);
      }
    }
  v.pure = is_pure(t).pure;
  double min_eig = 0.0;
  v.szego = szego_holds(t, &min_eig);
  v.holds = v.residual <= t.tol().structural && v.pure && v.szego;
  return v;
}

Classification classify(const CTuple& t, const std::optional<WindowMask>& mask) {
  Classification c;
  c.n = t.n();
  c.dim = t.dim();
  for (std::size_t i = 0; i < t.n(); ++i) {
    c.norms.push_back(spectral_norm(t.op(i)));
    for (std::size_t j = i + 1; j < t.n(); ++j)
      c.max_commutator = std::max(
          c.max_commutator, spectral_norm(commutator(t.op(i), t.op(j))));
  }
  c.purity = is_pure(t);
  c.szego = szego_holds(t, &c.szego_min_eig);
  c.beurling = is_beurling(t, mask);
  return c;
}

CTuple szego_tuple_from_nodes(std::span<const std::vector<cplx>> nodes,
                              const Tolerances& tol, double max_gram_cond) {
  if (nodes.empty()) throw Error(ErrorCode::InvalidArgument, "no nodes");
  const std::size_t n = nodes.front().size();
  const std::size_t m = nodes.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "nodes need coordinates");
  for (std::size_t l = 0; l < m; ++l) {
    if (nodes[l].size() != n) {
      throw Error(ErrorCode::ShapeMismatch, "nodes differ in length");
    }
    for (std::size_t i = 0; i < n; ++i)
      if (!(std::abs(nodes[l][i]) < 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "node outside the polydisc",
                    {.i = static_cast<int>(l), .j = static_cast<int>(i)});
      }
  }
  // gram(k, l) = <k_l, k_k> = prod_i 1 / (1 - w_{k,i} conj(w_{l,i}))
  CMatrix gram(m, m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = 0; l < m; ++l) {
      cplx v = 1.0;
      for (std::size_t i = 0; i < n; ++i)
        v /= (1.0 - nodes[k][i] * std::conj(nodes[l][i]));
      gram(k, l) = v;
    }
  const CMatrix r = cholesky_upper(gram, max_gram_cond);
  const CMatrix r_inv = inverse(r, 0.0);
  // The adjoint of each compressed shift is diagonal in the kernel basis,
  // so C_i = R^{-H} diag(w_i) R^H in the orthonormal basis k R^{-1}.
  std::vector<CMatrix> ops;
  ops.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<cplx> diag(m);
    for (std::size_t l = 0; l < m; ++l) diag[l] = nodes[l][i];
    ops.push_back(r_inv.adjoint() * CMatrix::diagonal(diag) * r.adjoint());
  }
  return validate(std::move(ops), tol);
}

}  // namespace polydisc
