// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#include "polydisc/subspace.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "eigen_bridge.hpp"
#include "polydisc/error.hpp"

namespace polydisc {

using detail::from_eigen;
using detail::to_eigen;

CMatrix Subspace::projector() const { return mul_adj(basis, basis); }

Subspace Subspace::zero(std::size_t ambient) {
  return {ambient, CMatrix(ambient, 0)};
}

Subspace Subspace::whole(std::size_t ambient) {
  return {ambient, CMatrix::identity(ambient)};
}

Subspace Subspace::coordinates(std::size_t ambient,
                               const std::vector<std::size_t>& idx) {
  CMatrix b(ambient, idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) b(idx[k], k) = 1.0;
  return {ambient, b};
}

void normalize_phases(CMatrix& basis) {
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    double peak = 0.0;
    for (std::size_t i = 0; i < basis.rows(); ++i)
      peak = std::max(peak, std::abs(basis(i, j)));
    if (peak == 0.0) continue;
    for (std::size_t i = 0; i < basis.rows(); ++i) {
      const double m = std::abs(basis(i, j));
      if (m > 1e-8 * peak) {
        const cplx phase = std::conj(basis(i, j)) / m;
        for (std::size_t r = 0; r < basis.rows(); ++r) basis(r, j) *= phase;
        basis(i, j) = m;
        break;
      }
    }
  }
}

Subspace range_basis(const CMatrix& a, const Tolerances& tol) {
  if (a.rows() == 0 || a.cols() == 0) return Subspace::zero(a.rows());
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(to_eigen(a), Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double cut = tol.rank * std::max(s(0), 1.0);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > cut) ++r;
  CMatrix basis = from_eigen(svd.matrixU().leftCols(r));
  normalize_phases(basis);
  return {a.rows(), basis};
}

PsdRoot psd_root(const CMatrix& a, const Tolerances& tol) {
  const HermEig e = herm_eig(a, tol);
  PsdRoot out;
  const std::size_t n = e.values.size();
  out.eigenvalues = e.values;
  out.root = CMatrix(n, n);
  out.range = Subspace::zero(n);
  if (n == 0) return out;
  out.max_eig = e.values.front();
  out.min_eig = e.values.back();
  const double scale =
      std::max({std::abs(out.max_eig), std::abs(out.min_eig), 1.0});
  if (out.min_eig < -tol.psd_clamp * scale) {
    throw Error(ErrorCode::NotPsd, "negative eigenvalue", {.value = out.min_eig});
  }
  const double cut = tol.rank * scale;
  std::vector<std::size_t> keep;
  CMatrix scaled = e.vectors;
  for (std::size_t k = 0; k < n; ++k) {
    // Eigenvalues under the cut are noise; their roots would not be.
    const double s = e.values[k] > cut ? std::sqrt(e.values[k]) : 0.0;
    for (std::size_t i = 0; i < n; ++i) scaled(i, k) *= s;
    if (e.values[k] > cut) keep.push_back(k);
  }
  out.root = mul_adj(scaled, e.vectors);
  CMatrix basis = e.vectors.cols_subset(keep);
  normalize_phases(basis);
  out.range = {n, basis};
  return out;
}

CMatrix psd_sqrt(const CMatrix& a, const Tolerances& tol) {
  return psd_root(a, tol).root;
}

CMatrix psd_root_pinv(const PsdRoot& r) {
  // Kept eigenvalues are the leading ones and the range basis holds their
  // eigenvectors in the same order.
  CMatrix scaled = r.range.basis;
  for (std::size_t k = 0; k < scaled.cols(); ++k) {
    const double inv = 1.0 / std::sqrt(r.eigenvalues[k]);
    for (std::size_t i = 0; i < scaled.rows(); ++i) scaled(i, k) *= inv;
  }
  return mul_adj(scaled, r.range.basis);
}

LoewnerVerdict loewner_leq(const CMatrix& a, const CMatrix& b,
                           const Tolerances& tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "loewner comparison");
  }
  const auto va = herm_eigenvalues(a, tol);
  const auto vb = herm_eigenvalues(b, tol);
  const auto vd = herm_eigenvalues(b - a, tol);
  LoewnerVerdict out;
  out.witness_min_eig = vd.empty() ? 0.0 : vd.back();
  double scale = 1.0;
  for (const auto* v : {&va, &vb})
    if (!v->empty())
      scale = std::max({scale, std::abs(v->front()), std::abs(v->back())});
  out.holds = out.witness_min_eig >= -tol.psd_clamp * scale;
  return out;
}

Subspace span(const CMatrix& vectors, const Tolerances& tol) {
  return range_basis(vectors, tol);
}

Subspace sum(const Subspace& a, const Subspace& b, const Tolerances& tol) {
  if (a.ambient != b.ambient) throw Error(ErrorCode::ShapeMismatch, "sum");
  const CMatrix parts[] = {a.basis, b.basis};
  return span(hstack(parts), tol);
}

namespace {

// a * eigenvectors of a^H m a whose eigenvalue is below the cut, where m is
// a projector. Eigenvalues are sin^2 or cos^2 of principal angles.
Subspace select_small(const Subspace& a, const CMatrix& m,
                      const Tolerances& tol) {
  if (a.dim() == 0) return Subspace::zero(a.ambient);
  const CMatrix g = hermitian_part(adj_mul(a.basis, m * a.basis));
  const HermEig e = herm_eig(g, tol);
  std::vector<std::size_t> keep;
  for (std::size_t k = e.values.size(); k-- > 0;)
    if (e.values[k] <= tol.rank) keep.push_back(k);
  CMatrix basis = a.basis * e.vectors.cols_subset(keep);
  normalize_phases(basis);
  return {a.ambient, basis};
}

}  // namespace

Subspace intersect(const Subspace& a, const Subspace& b,
                   const Tolerances& tol) {
  if (a.ambient != b.ambient) throw Error(ErrorCode::ShapeMismatch, "intersect");
  const CMatrix away = CMatrix::identity(a.ambient) - b.projector();
  return select_small(a, away, tol);
}

Subspace minus(const Subspace& a, const Subspace& b, const Tolerances& tol) {
  if (a.ambient != b.ambient) throw Error(ErrorCode::ShapeMismatch, "minus");
  return select_small(a, b.projector(), tol);
}

Subspace complement(const Subspace& a, const Tolerances& tol) {
  return minus(Subspace::whole(a.ambient), a, tol);
}

Subspace embed(const CMatrix& e, const Subspace& a) {
  if (e.cols() != a.ambient) throw Error(ErrorCode::ShapeMismatch, "embed");
  return {e.rows(), e * a.basis};
}

double subspace_distance(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) {
    throw Error(ErrorCode::ShapeMismatch, "subspace distance");
  }
  const auto v = herm_eigenvalues(a.projector() - b.projector());
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double containment_residual(const CMatrix& vectors, const Subspace& s) {
  if (vectors.cols() == 0) return 0.0;
  const CMatrix r = vectors - s.basis * adj_mul(s.basis, vectors);
  return spectral_norm(r);
}

}  // namespace polydisc
