// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#include "polydisc/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "eigen_bridge.hpp"
#include "polydisc/error.hpp"

namespace polydisc {

using detail::from_eigen;
using detail::to_eigen;

void Tolerances::validate() const {
  for (double v : {structural, rank, psd_clamp, pure}) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::InvalidArgument,
                  "tolerances must be positive and finite");
    }
  }
}

namespace {

void require_square(const CMatrix& a, const char* what) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, what);
}

// Returns the Hermitian part after checking that the anti-Hermitian part is
// negligible against max(||a||, 1).
Eigen::MatrixXcd checked_hermitian(const CMatrix& a, const Tolerances& tol) {
  require_square(a, "hermitian eigendecomposition");
  if (!a.all_finite()) {
    throw Error(ErrorCode::NotHermitian, "non-finite entries");
  }
  Eigen::MatrixXcd m = to_eigen(a);
  Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  const Eigen::MatrixXcd skew = 0.5 * (m - m.adjoint());
  const double skew_f = skew.norm();
  const double scale = std::max(h.norm(), 1.0);
  // Frobenius bounds the spectral norm from above, so the cheap test is
  // conclusive when it passes.
  if (2.0 * skew_f > tol.structural * scale) {
    Eigen::MatrixXcd ih = cplx(0.0, 1.0) * skew;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(ih, Eigen::EigenvaluesOnly);
    const double skew_norm = es.eigenvalues().cwiseAbs().maxCoeff();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> hs(h, Eigen::EigenvaluesOnly);
    const double hnorm =
        h.rows() == 0 ? 0.0 : hs.eigenvalues().cwiseAbs().maxCoeff();
    if (2.0 * skew_norm > tol.structural * std::max(hnorm, 1.0)) {
      throw Error(ErrorCode::NotHermitian, "anti-Hermitian part too large",
                  {.value = 2.0 * skew_norm});
    }
  }
  return h;
}

}  // namespace

HermEig herm_eig(const CMatrix& a, const Tolerances& tol) {
  const Eigen::MatrixXcd h = checked_hermitian(a, tol);
  HermEig out;
  const auto n = static_cast<std::size_t>(h.rows());
  out.vectors = CMatrix(n, n);
  if (n == 0) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  out.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto src = static_cast<Eigen::Index>(n - 1 - k);
    out.values[k] = es.eigenvalues()(src);
    for (std::size_t i = 0; i < n; ++i)
      out.vectors(i, k) = es.eigenvectors()(static_cast<Eigen::Index>(i), src);
  }
  return out;
}

std::vector<double> herm_eigenvalues(const CMatrix& a, const Tolerances& tol) {
  const Eigen::MatrixXcd h = checked_hermitian(a, tol);
  std::vector<double> out(static_cast<std::size_t>(h.rows()));
  if (out.empty()) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = es.eigenvalues()(static_cast<Eigen::Index>(out.size() - 1 - k));
  return out;
}

double min_eigenvalue(const CMatrix& a, const Tolerances& tol) {
  const auto v = herm_eigenvalues(a, tol);
  return v.empty() ? 0.0 : v.back();
}

std::vector<double> singular_values(const CMatrix& a) {
  if (a.empty()) return {};
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(to_eigen(a));
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

double spectral_norm(const CMatrix& a) {
  if (a.empty()) return 0.0;
  const auto s = singular_values(a);
  return s.empty() ? 0.0 : s.front();
}

Svd svd(const CMatrix& a) {
  Svd out;
  if (a.empty()) {
    out.u = CMatrix(a.rows(), 0);
    out.v = CMatrix(a.cols(), 0);
    return out;
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> dec(to_eigen(a),
                                      Eigen::ComputeThinU | Eigen::ComputeThinV);
  out.u = from_eigen(dec.matrixU());
  out.v = from_eigen(dec.matrixV());
  const auto& s = dec.singularValues();
  out.s.assign(s.data(), s.data() + s.size());
  return out;
}

CMatrix polar_unitary(const CMatrix& a) {
  require_square(a, "polar factor");
  const Svd d = svd(a);
  return mul_adj(d.u, d.v);
}

std::vector<cplx> eigenvalues(const CMatrix& a) {
  require_square(a, "eigenvalues");
  if (a.empty()) return {};
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(to_eigen(a), false);
  const auto& v = es.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

double spectral_radius(const CMatrix& a) {
  double r = 0.0;
  for (const auto& l : eigenvalues(a)) r = std::max(r, std::abs(l));
  return r;
}

CMatrix lu_solve(const CMatrix& a, const CMatrix& b, double min_rcond) {
  require_square(a, "lu_solve");
  if (a.rows() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "lu_solve");
  if (a.empty()) return b;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(to_eigen(a));
  const double rc = lu.rcond();
  if (!(rc >= min_rcond)) {
    throw Error(ErrorCode::SingularResolvent, "ill-conditioned system",
                {.value = rc});
  }
  return from_eigen(lu.solve(to_eigen(b)));
}

CMatrix inverse(const CMatrix& a, double min_rcond) {
  return lu_solve(a, CMatrix::identity(a.rows()), min_rcond);
}

CMatrix cholesky_upper(const CMatrix& g, double max_cond) {
  Tolerances loose;
  loose.structural = 1e-8;
  const auto ev = herm_eigenvalues(g, loose);
  if (ev.empty()) return {};
  const double cond = ev.back() > 0.0 ? ev.front() / ev.back()
                                      : std::numeric_limits<double>::infinity();
  if (!(cond <= max_cond)) {
    throw Error(ErrorCode::NearSingularGram, "Gram matrix condition",
                {.value = cond});
  }
  Eigen::MatrixXcd h = to_eigen(hermitian_part(g));
  Eigen::LLT<Eigen::MatrixXcd> llt(h);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::NearSingularGram, "Cholesky failed", {.value = cond});
  }
  Eigen::MatrixXcd r = llt.matrixU();
  return from_eigen(r);
}

}  // namespace polydisc
