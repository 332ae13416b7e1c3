// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#include <gtest/gtest.h>

#include <cmath>

#include "polydisc/error.hpp"
#include "polydisc/generators.hpp"
#include "polydisc/tuple.hpp"

namespace {

using namespace polydisc;

const CMatrix kJordan{{0.0, 1.0}, {0.0, 0.0}};

CMatrix corner(std::size_t n, std::size_t k) {
  CMatrix e(n, n);
  e(k, k) = 1.0;
  return e;
}

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

TEST(Validate, DiagonalPairIsAccepted) {
  const CTuple t = validate({CMatrix{{0.5}}, CMatrix{{0.3}}});
  EXPECT_EQ(t.n(), 2u);
  EXPECT_EQ(t.dim(), 1u);
}

TEST(Validate, JordanAndTransposeDoNotCommute) {
  try {
    validate({kJordan, kJordan.transpose()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCommuting);
    EXPECT_EQ(e.info().i, 0);
    EXPECT_EQ(e.info().j, 1);
    EXPECT_NEAR(e.info().value, 1.0, 1e-15);
  }
}

TEST(Validate, ScalarTwoIsNotAContraction) {
  try {
    validate({CMatrix{{2.0}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotContraction);
    EXPECT_EQ(e.info().i, 0);
    EXPECT_NEAR(e.info().value, 2.0, 1e-15);
  }
}

TEST(Validate, ShapeAndFinitenessErrors) {
  EXPECT_EQ(code_of([] { validate({CMatrix(2, 3)}); }), ErrorCode::NotSquare);
  EXPECT_EQ(code_of([] { validate({CMatrix(2, 2), CMatrix(3, 3)}); }),
            ErrorCode::ShapeMismatch);
  EXPECT_THROW(validate({}), Error);
}

TEST(Purity, Examples) {
  const auto half = is_pure(validate({CMatrix{{0.5}}}));
  EXPECT_TRUE(half.pure);
  EXPECT_NEAR(half.spectral_radii[0], 0.5, 1e-15);
  const auto nil = is_pure(validate({kJordan}));
  EXPECT_TRUE(nil.pure);
  EXPECT_NEAR(nil.spectral_radii[0], 0.0, 1e-12);
  const auto one = is_pure(validate({CMatrix{{1.0}}}));
  EXPECT_FALSE(one.pure);
  EXPECT_NEAR(one.spectral_radii[0], 1.0, 1e-15);
}

TEST(SzegoInverse, ScalarAndZeroPair) {
  const cplx a(0.3, 0.4);
  const CMatrix s = szego_inverse(validate({CMatrix{{a}}}));
  EXPECT_NEAR(std::abs(s(0, 0) - (1.0 - std::norm(a))), 0.0, 1e-15);
  const CMatrix z = szego_inverse(validate({CMatrix{{0.0}}, CMatrix{{0.0}}}));
  EXPECT_NEAR(std::abs(z(0, 0) - 1.0), 0.0, 1e-15);
}

TEST(SzegoInverse, BishiftIsCornerOfCorners) {
  for (std::size_t n : {1u, 2u, 3u}) {
    const CTuple t = gen::truncated_bishift(n);
    const CMatrix e0 = corner(n + 1, 0);
    EXPECT_LE(spectral_norm(szego_inverse(t) - kron(e0, e0)), 1e-14);
    EXPECT_LE(spectral_norm(szego_inverse_iterated(t) - kron(e0, e0)), 1e-14);
  }
}

TEST(SzegoInverse, SignedSumMatchesIteratedForm) {
  gen::Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const CTuple t = gen::kernel_node_tuple(rng, 3, 4, 0.8);
    EXPECT_LE(spectral_norm(szego_inverse(t) - szego_inverse_iterated(t)), 1e-12);
  }
}

TEST(FirstKindDefect, Examples) {
  const DefectRoot zero = defect_first_kind(validate({CMatrix{{0.0}}}));
  EXPECT_NEAR(std::abs(zero.op(0, 0)), 1.0, 1e-15);
  EXPECT_EQ(zero.space.dim(), 1u);

  const double a = 0.6;
  const DefectRoot scalar = defect_first_kind(validate({CMatrix{{a}}}));
  EXPECT_NEAR(std::abs(scalar.op(0, 0)), std::sqrt(1.0 - a * a), 1e-15);

  const std::size_t n = 4;
  const CTuple t = validate({CMatrix(n + 1, n + 1), gen::truncated_shift(n)});
  const DefectRoot d = defect_first_kind(t);
  EXPECT_LE(spectral_norm(d.op - corner(n + 1, 0)), 1e-14);
  ASSERT_EQ(d.space.dim(), 1u);
  EXPECT_NEAR(std::abs(d.space.basis(0, 0)), 1.0, 1e-15);
}

TEST(ClassicalDefect, Examples) {
  EXPECT_NEAR(std::abs(classical_defect(CMatrix{{0.0}}).op(0, 0)), 1.0, 1e-15);
  EXPECT_LE(spectral_norm(classical_defect(kJordan).op - corner(2, 0)), 1e-15);
  gen::Rng rng(22);
  const DefectRoot u = classical_defect(gen::haar_unitary(rng, 4));
  EXPECT_LE(spectral_norm(u.op), 1e-7);
  EXPECT_EQ(u.space.dim(), 0u);
}

TEST(Beurling, SingleOperatorHoldsVacuously) {
  gen::Rng rng(23);
  const auto v = is_beurling(validate({gen::random_pure_contraction(rng, 4, 0.9)}));
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.residual, 0.0);
}

TEST(Beurling, BishiftFailsWithCornerProduct) {
  for (std::size_t n : {2u, 3u, 5u}) {
    const auto v = is_beurling(gen::truncated_bishift(n));
    EXPECT_FALSE(v.holds);
    EXPECT_NEAR(v.residual, 1.0, 1e-14);
    EXPECT_EQ(v.worst_i, 0);
    EXPECT_EQ(v.worst_j, 1);
  }
}

TEST(Beurling, BishiftHoldsOnLowDegreeWindow) {
  const std::size_t n = 3;
  std::vector<std::size_t> keep;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) keep.push_back(a * (n + 1) + b);
  const WindowMask mask =
      WindowMask::from_subspace(Subspace::coordinates((n + 1) * (n + 1), keep));
  const auto v = is_beurling(gen::truncated_bishift(n), mask);
  EXPECT_TRUE(v.holds);
  EXPECT_TRUE(v.masked);
  EXPECT_EQ(v.residual, 0.0);
}

TEST(KernelNodes, SingleNodeGivesScalar) {
  const std::vector<std::vector<cplx>> nodes{{cplx(0.5)}};
  const CTuple t = szego_tuple_from_nodes(nodes);
  ASSERT_EQ(t.dim(), 1u);
  EXPECT_NEAR(std::abs(t.op(0)(0, 0) - 0.5), 0.0, 1e-14);
}

TEST(KernelNodes, TwoNodesInBidiscAreSzego) {
  const std::vector<std::vector<cplx>> nodes{{0.0, 0.0}, {0.5, 0.0}};
  const CTuple t = szego_tuple_from_nodes(nodes);
  EXPECT_EQ(t.dim(), 2u);
  EXPECT_GE(min_eigenvalue(szego_inverse(t)), -1e-12);
  EXPECT_TRUE(classify(t).szego);
}

TEST(KernelNodes, SpectralRadiiAreNodeMaxima) {
  gen::Rng rng(24);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<cplx>> nodes(3);
    for (auto& w : nodes) w = gen::point_in_polydisc(rng, 2, 0.8);
    const CTuple t = szego_tuple_from_nodes(nodes);
    const auto p = is_pure(t);
    EXPECT_TRUE(p.pure);
    for (std::size_t i = 0; i < 2; ++i) {
      double m = 0.0;
      for (const auto& w : nodes) m = std::max(m, std::abs(w[i]));
      EXPECT_NEAR(p.spectral_radii[i], m, 1e-8);
    }
  }
}

TEST(Conjugation, PreservesClassification) {
  gen::Rng rng(25);
  const CTuple t = gen::kernel_node_tuple(rng, 2, 3, 0.7);
  const CMatrix u = gen::haar_unitary(rng, t.dim());
  const CTuple s = conjugate(t, u);
  for (std::size_t i = 0; i < 2; ++i)
    EXPECT_LE(spectral_norm(s.op(i) - u * mul_adj(t.op(i), u)), 1e-13);
  EXPECT_EQ(classify(s).szego, classify(t).szego);
  EXPECT_NEAR(classify(s).szego_min_eig, classify(t).szego_min_eig, 1e-12);
}

TEST(WindowMaskOps, TransportAndRepeat) {
  const WindowMask m = WindowMask::from_subspace(Subspace::coordinates(3, {0}));
  const CMatrix r = m.block_repeat(2);
  EXPECT_EQ(r.rows(), 6u);
  EXPECT_NEAR(std::abs(r(3, 3) - 1.0), 0.0, 0.0);
  gen::Rng rng(26);
  const CMatrix u = gen::haar_unitary(rng, 3);
  const WindowMask t = m.transported(u);
  EXPECT_LE(spectral_norm(t.projection - u * mul_adj(m.projection, u)), 1e-14);
}

TEST(Generators, SeededAndWithinBounds) {
  gen::Rng a(31), b(31);
  EXPECT_LE(spectral_norm(gen::gaussian_matrix(a, 3, 3) - gen::gaussian_matrix(b, 3, 3)), 0.0);
  gen::Rng rng(32);
  for (int k = 0; k < 20; ++k) {
    const CMatrix c = gen::random_pure_contraction(rng, 5, 0.95);
    EXPECT_LE(spectral_norm(c), 1.0 + 1e-12);
    EXPECT_LE(spectral_radius(c), 0.95 + 1e-12);
  }
  const CTuple nil = gen::nilpotent_tuple(rng, 2, 4);
  CMatrix p = nil.op(0) * nil.op(1);
  for (int k = 0; k < 8; ++k) p = p * (nil.op(k % 2));
  EXPECT_LE(spectral_norm(p), 1e-14);
}

}  // namespace
