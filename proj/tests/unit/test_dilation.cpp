// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#include <gtest/gtest.h>

#include <cmath>

#include "polydisc/dilation.hpp"
#include "polydisc/error.hpp"
#include "polydisc/generators.hpp"

namespace {

using namespace polydisc;

CTuple scalar(double a) { return validate({CMatrix{{a}}}); }

CTuple zero_shift(std::size_t m) {
  return validate({CMatrix(m + 1, m + 1), gen::truncated_shift(m)});
}

CTuple nilpotent_pair() {
  const CMatrix j{{0.0, 1.0}, {0.0, 0.0}};
  return validate({kron(j, CMatrix::identity(2)), kron(CMatrix::identity(2), j)});
}

TEST(BuildDilation, ScalarCoefficientsAreGeometric) {
  const double a = 0.6;
  const Dilation d = build_dilation(scalar(a), 12);
  ASSERT_EQ(d.space.coeff_dim(), 1u);
  for (std::size_t m = 0; m < d.space.monomial_count(); ++m) {
    const int k = d.space.monomial(m)[0];
    EXPECT_NEAR(std::abs(d.embedding(d.space.position(m, 0), 0)),
                std::sqrt(1.0 - a * a) * std::pow(a, k), 1e-14);
  }
}

TEST(BuildDilation, ZeroShiftCoefficientsLiveOnSecondAxis) {
  const std::size_t m = 3;
  const Dilation d = build_dilation(zero_shift(m), 5);
  for (std::size_t mono = 0; mono < d.space.monomial_count(); ++mono) {
    const MultiIndex& k = d.space.monomial(mono);
    double row = 0.0;
    for (std::size_t c = 0; c < d.embedding.cols(); ++c)
      row = std::max(row, std::abs(d.embedding(d.space.position(mono, 0), c)));
    if (k[0] != 0 || k[1] > static_cast<int>(m)) EXPECT_EQ(row, 0.0);
    else EXPECT_NEAR(row, 1.0, 1e-15);
  }
}

TEST(BuildDilation, NilpotentTailVanishes) {
  const Dilation d = build_dilation(nilpotent_pair(), 3);
  EXPECT_EQ(d.tail_bound, 0.0);
  EXPECT_EQ(auto_dilation_degree(nilpotent_pair()), 4);
}

TEST(BuildDilation, RejectsNonSzego) {
  const CMatrix j{{0.0, 1.0}, {0.0, 0.0}};
  EXPECT_THROW(build_dilation(validate({j, j})), Error);
}

TEST(Defects, ScalarIsometryDefectIsGeometricTail) {
  const double a = 0.7;
  for (int n : {3, 8, 15}) {
    const DilationDefects dd = dilation_defects(build_dilation(scalar(a), n));
    EXPECT_NEAR(dd.isometry, std::pow(a, 2 * (n + 1)), 1e-14);
    EXPECT_LE(dd.isometry, dd.tail_bound + 1e-15);
  }
}

TEST(Defects, ScalarAllDefectsSmall) {
  const DilationDefects dd = dilation_defects(build_dilation(scalar(0.4)));
  EXPECT_LE(dd.intertwining, 1e-12);
  EXPECT_LE(dd.minimality, 1e-8);
  EXPECT_LE(dd.model_equivalence, 1e-10);
}

TEST(Defects, NilpotentPairIsExact) {
  const DilationDefects dd = dilation_defects(build_dilation(nilpotent_pair(), 4));
  EXPECT_LE(dd.isometry, 1e-13);
  EXPECT_LE(dd.intertwining, 1e-13);
  EXPECT_LE(dd.model_equivalence, 1e-12);
  EXPECT_LE(dd.minimality, 1e-8);
}

TEST(Defects, ZeroPairOnLineIsExact) {
  const CTuple t = validate({CMatrix{{0.0}}, CMatrix{{0.0}}});
  const DilationDefects dd = dilation_defects(build_dilation(t, 3));
  EXPECT_EQ(dd.intertwining, 0.0);
  EXPECT_EQ(dd.model_equivalence, 0.0);
  EXPECT_EQ(dd.isometry, 0.0);
}

TEST(Defects, ZeroShiftMinimality) {
  const DilationDefects dd = dilation_defects(build_dilation(zero_shift(3), 6));
  EXPECT_LE(dd.minimality, 1e-8);
}

TEST(Defects, KernelNodeHalfRadius) {
  gen::Rng rng(61);
  const CTuple t = gen::kernel_node_tuple(rng, 2, 3, 0.5);
  const DilationDefects dd = dilation_defects(build_dilation(t, 30));
  EXPECT_LE(dd.isometry, 1e-17 + 1e-10);
  EXPECT_LE(dd.tail_bound, 1e-15);
}

TEST(Defects, KernelNodeBatteryWithinTailBound) {
  gen::Rng rng(62);
  for (int trial = 0; trial < 10; ++trial) {
    const CTuple t = gen::kernel_node_tuple(rng, 1 + trial % 2, 1 + trial % 4, 0.8);
    const Dilation d = build_dilation(t);
    const DilationDefects dd = dilation_defects(d);
    for (const auto& c : dilation_checks(dd)) EXPECT_TRUE(c.pass) << c.name << " " << c.value;
    EXPECT_LE(dd.isometry, dd.tail_bound + 1e-10);
  }
}

TEST(Image, QuotientModuleIsCoinvariantOnWindow) {
  gen::Rng rng(63);
  const CTuple t = gen::kernel_node_tuple(rng, 2, 3, 0.6);
  const Dilation d = build_dilation(t);
  const Subspace img = dilation_image(d);
  EXPECT_EQ(img.dim(), t.dim());
  for (std::size_t i = 0; i < 2; ++i) {
    const CMatrix back = apply_shift_adjoint(d.space, i, img.basis);
    EXPECT_LE(containment_residual(back, img), d.tail_bound + 1e-10);
  }
}

TEST(TailBound, DecreasesWithDegree) {
  gen::Rng rng(64);
  const CTuple t = gen::kernel_node_tuple(rng, 2, 3, 0.8);
  const Dilation a = build_dilation(t, 10);
  const Dilation b = build_dilation(t, 20);
  EXPECT_GT(a.tail_bound, b.tail_bound);
  EXPECT_GT(b.tail_bound, 0.0);
  EXPECT_LE(dilation_defects(a).isometry, a.tail_bound);
}

}  // namespace
