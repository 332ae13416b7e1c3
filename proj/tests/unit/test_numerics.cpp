// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>

#include "polydisc/error.hpp"
#include "polydisc/generators.hpp"
#include "polydisc/linalg.hpp"
#include "polydisc/subspace.hpp"

namespace {

using namespace polydisc;

// Independent reference through Eigen's self-adjoint solver.
std::vector<double> eigen_reference(const CMatrix& a) {
  Eigen::MatrixXcd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + a.rows());
  std::reverse(v.begin(), v.end());
  return v;
}

CMatrix random_hermitian(gen::Rng& rng, std::size_t n) {
  const CMatrix b = gen::gaussian_matrix(rng, n, n);
  return hermitian_part(b);
}

TEST(HermEig, DiagonalInputKeepsOrderAndBasis) {
  const HermEig e = herm_eig(CMatrix{{2.0, 0.0}, {0.0, 1.0}});
  ASSERT_EQ(e.values.size(), 2u);
  EXPECT_NEAR(e.values[0], 2.0, 1e-15);
  EXPECT_NEAR(e.values[1], 1.0, 1e-15);
  EXPECT_NEAR(std::abs(e.vectors(0, 0)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(e.vectors(1, 1)), 1.0, 1e-15);
}

TEST(HermEig, PauliXHasSymmetricAndAntisymmetricVectors) {
  const HermEig e = herm_eig(CMatrix{{0.0, 1.0}, {1.0, 0.0}});
  EXPECT_NEAR(e.values[0], 1.0, 1e-15);
  EXPECT_NEAR(e.values[1], -1.0, 1e-15);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(e.vectors(0, 0)), r, 1e-14);
  EXPECT_NEAR(std::abs(e.vectors(1, 0)), r, 1e-14);
  EXPECT_NEAR(std::abs(e.vectors(0, 0) - e.vectors(1, 0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(e.vectors(0, 1) + e.vectors(1, 1)), 0.0, 1e-14);
}

TEST(HermEig, GramMatrixReconstructs) {
  gen::Rng rng(11);
  const CMatrix b = gen::gaussian_matrix(rng, 6, 6);
  const CMatrix a = adj_mul(b, b);
  const HermEig e = herm_eig(a);
  CMatrix d(6, 6);
  for (std::size_t k = 0; k < 6; ++k) d(k, k) = e.values[k];
  const CMatrix back = e.vectors * mul_adj(d, e.vectors);
  EXPECT_LE(spectral_norm(back - a), 1e-12 * spectral_norm(a));
  for (std::size_t k = 1; k < 6; ++k) EXPECT_GE(e.values[k - 1], e.values[k]);
  EXPECT_LE(spectral_norm(adj_mul(e.vectors, e.vectors) - CMatrix::identity(6)), 1e-13);
}

TEST(HermEig, AgreesWithEigenSolver) {
  gen::Rng rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix a = random_hermitian(rng, 7);
    const auto ours = herm_eigenvalues(a);
    const auto ref = eigen_reference(a);
    for (std::size_t k = 0; k < ours.size(); ++k) EXPECT_NEAR(ours[k], ref[k], 1e-12);
  }
}

TEST(HermEig, RejectsNonHermitianAndNonSquare) {
  try {
    herm_eig(CMatrix{{0.0, 1.0}, {0.0, 0.0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotHermitian);
  }
  try {
    herm_eig(CMatrix(2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSquare);
  }
}

TEST(PsdSqrt, IdentityAndDiagonal) {
  EXPECT_LE(spectral_norm(psd_sqrt(CMatrix::identity(3)) - CMatrix::identity(3)), 1e-15);
  const CMatrix s = psd_sqrt(CMatrix{{4.0, 0.0}, {0.0, 0.0}});
  EXPECT_LE(spectral_norm(s - CMatrix{{2.0, 0.0}, {0.0, 0.0}}), 1e-15);
}

TEST(PsdSqrt, RankOneProjectorScaling) {
  const double r = 1.0 / std::sqrt(2.0);
  const CMatrix v = CMatrix::column(std::vector<cplx>{r, cplx(0.0, r)});
  const CMatrix p = mul_adj(v, v);
  const CMatrix s = psd_sqrt(0.75 * p);
  EXPECT_LE(spectral_norm(s - std::sqrt(0.75) * p), 1e-14);
}

TEST(PsdSqrt, RoundTripOnRandomPsd) {
  gen::Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix b = gen::gaussian_matrix(rng, 5, 3);
    const CMatrix a = mul_adj(b, b);
    const CMatrix s = psd_sqrt(a);
    EXPECT_LE(spectral_norm(s * s - a), 1e-10 * spectral_norm(a));
  }
}

TEST(PsdSqrt, ClampsTinyNegativesAndRejectsLargeOnes) {
  const CMatrix tiny{{1.0, 0.0}, {0.0, -1e-12}};
  EXPECT_NO_THROW(psd_sqrt(tiny));
  try {
    psd_sqrt(CMatrix{{1.0, 0.0}, {0.0, -1e-3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPsd);
  }
}

TEST(RangeBasis, Examples) {
  EXPECT_EQ(range_basis(CMatrix(3, 3)).dim(), 0u);
  const Subspace e1 = range_basis(CMatrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  ASSERT_EQ(e1.dim(), 1u);
  EXPECT_NEAR(std::abs(e1.basis(0, 0)), 1.0, 1e-15);
  const Subspace ones = range_basis(CMatrix{{1, 1}, {1, 1}});
  ASSERT_EQ(ones.dim(), 1u);
  EXPECT_NEAR(std::abs(ones.basis(0, 0)), 1.0 / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(std::abs(ones.basis(1, 0)), 1.0 / std::sqrt(2.0), 1e-14);
}

TEST(RangeBasis, SameAsRangeOfGram) {
  gen::Rng rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix a = gen::gaussian_matrix(rng, 6, 2) * gen::gaussian_matrix(rng, 2, 5);
    const Subspace r1 = range_basis(a);
    const Subspace r2 = range_basis(mul_adj(a, a));
    EXPECT_EQ(r1.dim(), 2u);
    EXPECT_LE(subspace_distance(r1, r2), 1e-8);
    EXPECT_LE(spectral_norm(adj_mul(r1.basis, r1.basis) - CMatrix::identity(r1.dim())), 1e-12);
  }
}

TEST(Loewner, Examples) {
  const auto a = loewner_leq(CMatrix(2, 2), CMatrix::identity(2));
  EXPECT_TRUE(a.holds);
  EXPECT_NEAR(a.witness_min_eig, 1.0, 1e-15);
  const auto b = loewner_leq(CMatrix::identity(2), CMatrix(2, 2));
  EXPECT_FALSE(b.holds);
  EXPECT_NEAR(b.witness_min_eig, -1.0, 1e-15);
  const auto c = loewner_leq(CMatrix{{1, 0}, {0, 0}}, CMatrix{{1, 0}, {0, 0.5}});
  EXPECT_TRUE(c.holds);
  EXPECT_NEAR(c.witness_min_eig, 0.0, 1e-15);
}

TEST(Loewner, ReflexiveAndAntisymmetric) {
  gen::Rng rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix a = random_hermitian(rng, 4);
    const CMatrix b = random_hermitian(rng, 4);
    EXPECT_TRUE(loewner_leq(a, a).holds);
    if (loewner_leq(a, b).holds && loewner_leq(b, a).holds) {
      EXPECT_LE(spectral_norm(a - b), 1e-9);
    }
    const CMatrix c = b + CMatrix::identity(4);
    if (loewner_leq(a, b).holds) EXPECT_TRUE(loewner_leq(a, c).holds);
  }
}

TEST(Norms, SpectralNormAndRadius) {
  EXPECT_NEAR(spectral_norm(CMatrix{{0, 1}, {0, 0}}), 1.0, 1e-15);
  EXPECT_NEAR(spectral_radius(CMatrix{{0, 1}, {0, 0}}), 0.0, 1e-12);
  EXPECT_NEAR(spectral_norm(CMatrix{{3, 0}, {0, cplx(0, -4)}}), 4.0, 1e-14);
}

TEST(Solvers, LuSolveAndPolar) {
  gen::Rng rng(16);
  const CMatrix a = gen::gaussian_matrix(rng, 5, 5) + 5.0 * CMatrix::identity(5);
  const CMatrix b = gen::gaussian_matrix(rng, 5, 2);
  EXPECT_LE(spectral_norm(a * lu_solve(a, b) - b), 1e-12);
  const CMatrix u = polar_unitary(a);
  EXPECT_LE(spectral_norm(adj_mul(u, u) - CMatrix::identity(5)), 1e-12);
  try {
    lu_solve(CMatrix(2, 2), CMatrix::identity(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularResolvent);
  }
}

TEST(Subspaces, SumIntersectComplement) {
  const Subspace x = Subspace::coordinates(4, {0, 1});
  const Subspace y = Subspace::coordinates(4, {1, 2});
  EXPECT_EQ(sum(x, y).dim(), 3u);
  EXPECT_EQ(intersect(x, y).dim(), 1u);
  EXPECT_EQ(minus(x, y).dim(), 1u);
  EXPECT_EQ(complement(x).dim(), 2u);
  EXPECT_LE(containment_residual(x.basis, sum(x, y)), 1e-14);
  EXPECT_NEAR(containment_residual(y.basis, x), 1.0, 1e-14);
}

TEST(Tolerances, RejectNegativeFields) {
  Tolerances t;
  t.rank = -1.0;
  EXPECT_THROW(t.validate(), Error);
  EXPECT_NO_THROW(Tolerances{}.validate());
}

TEST(CMatrixOps, KronAndBlocks) {
  const CMatrix a{{1, 2}, {3, 4}};
  const CMatrix k = kron(a, CMatrix::identity(2));
  EXPECT_EQ(k.rows(), 4u);
  EXPECT_EQ(k(2, 0), cplx(3.0));
  EXPECT_EQ(k(3, 1), cplx(3.0));
  EXPECT_EQ(k(2, 1), cplx(0.0));
  EXPECT_EQ((k.block(0, 2, 2, 2) - 2.0 * CMatrix::identity(2)).max_abs(), 0.0);
  EXPECT_THROW(CMatrix(2, 2) * CMatrix(3, 3), Error);
}

}  // namespace
