// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#include "polydisc/generators.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "../numerics/eigen_bridge.hpp"
#include "polydisc/error.hpp"

namespace polydisc::gen {

cplx gaussian(Rng& rng) {
  std::normal_distribution<double> nd(0.0, std::numbers::sqrt2 / 2.0);
  const double re = nd(rng);
  const double im = nd(rng);
  return {re, im};
}

CMatrix gaussian_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  CMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = gaussian(rng);
  return out;
}

CMatrix haar_unitary(Rng& rng, std::size_t n) {
  const Eigen::MatrixXcd g = detail::to_eigen(gaussian_matrix(rng, n, n));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const cplx d = r(j, j);
    const double m = std::abs(d);
    if (m > 0.0) q.col(j) *= d / m;
  }
  return detail::from_eigen(q);
}

cplx point_in_disc(Rng& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::sqrt(u(rng));
  const double t = 2.0 * std::numbers::pi * u(rng);
  return std::polar(r, t);
}

std::vector<cplx> point_in_polydisc(Rng& rng, std::size_t n, double radius) {
  std::vector<cplx> out(n);
  for (auto& z : out) z = point_in_disc(rng, radius);
  return out;
}

namespace {

double contraction_scale(const CMatrix& x, double rho_max) {
  const double nrm = spectral_norm(x);
  const double rho = spectral_radius(x);
  double s = nrm > 0.0 ? 1.0 / nrm : 1.0;
  if (rho > 0.0) s = std::min(s, rho_max / rho);
  return s;
}

}  // namespace

CMatrix random_pure_contraction(Rng& rng, std::size_t dim, double rho_max) {
  CMatrix x = gaussian_matrix(rng, dim, dim);
  return x *= contraction_scale(x, rho_max);
}

CMatrix truncated_shift(std::size_t degree) {
  CMatrix s(degree + 1, degree + 1);
  for (std::size_t k = 0; k < degree; ++k) s(k + 1, k) = 1.0;
  return s;
}

CTuple truncated_bishift(std::size_t degree, const Tolerances& tol) {
  const CMatrix s = truncated_shift(degree);
  const CMatrix id = CMatrix::identity(degree + 1);
  return validate({kron(s, id), kron(id, s)}, tol);
}

CTuple kernel_node_tuple(Rng& rng, std::size_t n, std::size_t m, double radius,
                         const Tolerances& tol, double max_cond) {
  constexpr int kAttempts = 200;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<std::vector<cplx>> nodes(m);
    for (auto& w : nodes) w = point_in_polydisc(rng, n, radius);
    try {
      return szego_tuple_from_nodes(nodes, tol, max_cond);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NearSingularGram &&
          e.code() != ErrorCode::NotCommuting &&
          e.code() != ErrorCode::NotContraction)
        throw;
    }
  }
  throw Error(ErrorCode::NearSingularGram,
              "no well-conditioned node set found");
}

CTuple nilpotent_tuple(Rng& rng, std::size_t n, std::size_t dim,
                       const Tolerances& tol) {
  CMatrix base(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) base(i, j) = gaussian(rng);
  std::vector<CMatrix> powers{base};
  for (std::size_t k = 1; k + 1 < dim; ++k) powers.push_back(powers.back() * base);
  std::uniform_real_distribution<double> shrink(0.5, 1.0);
  std::vector<CMatrix> ops;
  for (std::size_t i = 0; i < n; ++i) {
    CMatrix t(dim, dim);
    for (const auto& p : powers) t += gaussian(rng) * p;
    const double nrm = spectral_norm(t);
    if (nrm > 0.0) t *= shrink(rng) / nrm;
    ops.push_back(std::move(t));
  }
  return validate(std::move(ops), tol);
}

CTuple triangular_pair(Rng& rng, std::size_t dim, double rho_max,
                       const Tolerances& tol) {
  CMatrix a(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    a(i, i) = point_in_disc(rng, 1.0);
    for (std::size_t j = i + 1; j < dim; ++j) a(i, j) = 0.5 * gaussian(rng);
  }
  const cplx c0 = point_in_disc(rng, 0.5);
  const cplx c1 = gaussian(rng);
  const cplx c2 = 0.5 * gaussian(rng);
  CMatrix b = c1 * a + c2 * (a * a);
  for (std::size_t i = 0; i < dim; ++i) b(i, i) += c0;
  const CMatrix u = haar_unitary(rng, dim);
  CMatrix t1 = congruence(u, a);
  CMatrix t2 = congruence(u, b);
  t1 *= contraction_scale(t1, rho_max);
  t2 *= contraction_scale(t2, rho_max);
  return validate({t1, t2}, tol);
}

WindowedTuple node_shift_model(const std::vector<cplx>& nodes, std::size_t degree,
                               const Tolerances& tol) {
  std::vector<std::vector<cplx>> points;
  for (cplx a : nodes) points.push_back({a});
  const CMatrix a = szego_tuple_from_nodes(points, tol).op(0);
  const std::size_t m = nodes.size();
  const std::size_t len = degree + 1;
  const CMatrix s = truncated_shift(degree);
  CTuple t = validate({kron(a, CMatrix::identity(len)), kron(CMatrix::identity(m), s)}, tol);
  std::vector<std::size_t> keep;
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t k = 0; k < degree; ++k) keep.push_back(l * len + k);
  const WindowMask mask = WindowMask::from_subspace(Subspace::coordinates(m * len, keep));
  return {std::move(t), mask};
}

}  // namespace polydisc::gen
