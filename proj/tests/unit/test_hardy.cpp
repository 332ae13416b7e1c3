// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#include <gtest/gtest.h>

#include <cmath>

#include "polydisc/defects.hpp"
#include "polydisc/generators.hpp"
#include "polydisc/hardy_space.hpp"
#include "polydisc/inner_symbol.hpp"
#include "polydisc/quotient_model.hpp"

namespace {

using namespace polydisc;

CMatrix basis_vector(const HardySpace& s, const MultiIndex& k, std::size_t r = 0) {
  return CMatrix::unit(s.dim(), s.position(*s.monomial_index(k), r));
}

InnerSymbol z1() { return InnerSymbol::monomial({1, 0}); }
InnerSymbol z1z2() { return InnerSymbol::monomial({1, 1}); }

TEST(HardySpaceShape, Dimensions) {
  EXPECT_EQ(HardySpace(1, 3, 1).dim(), 4u);
  EXPECT_EQ(HardySpace(2, 2, 1).dim(), 9u);
  EXPECT_EQ(HardySpace(2, 2, 3).dim(), 27u);
  const HardySpace s(1, 3, 1);
  for (int k = 0; k <= 3; ++k) EXPECT_TRUE(s.monomial_index({k}).has_value());
  EXPECT_FALSE(s.monomial_index({4}).has_value());
}

TEST(HardySpaceShape, GradedOrder) {
  const HardySpace s(2, 3, 1);
  int prev = 0;
  for (std::size_t m = 0; m < s.monomial_count(); ++m) {
    const int deg = s.monomial(m)[0] + s.monomial(m)[1];
    EXPECT_GE(deg, prev);
    prev = deg;
  }
}

TEST(Shifts, OneVariableLadder) {
  const HardySpace s(1, 2, 1);
  const CMatrix m = shift_matrix(s, 0);
  EXPECT_LE(spectral_norm(m * basis_vector(s, {0}) - basis_vector(s, {1})), 0.0);
  EXPECT_LE(spectral_norm(m * basis_vector(s, {2})), 0.0);
}

TEST(Shifts, AdjointProductIsIdentityMinusTopDegree) {
  const HardySpace s(2, 3, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    const CMatrix m = shift_matrix(s, i);
    const CMatrix expected = CMatrix::identity(s.dim()) - top_degree(s, i).projector();
    EXPECT_LE(spectral_norm(adj_mul(m, m) - expected), 1e-15);
  }
}

TEST(Shifts, DoublyCommuteOnWindow) {
  const HardySpace s(2, 4, 1);
  const CMatrix m1 = shift_matrix(s, 0);
  const CMatrix m2 = shift_matrix(s, 1);
  const CMatrix p = degree_window(s, 3).projector();
  EXPECT_LE(spectral_norm(p * (adj_mul(m1, m2) - m2 * m1.adjoint()) * p), 1e-15);
  EXPECT_LE(spectral_norm(m1 * m2 - m2 * m1), 0.0);
}

TEST(Shifts, MatrixFreeFormsMatchDense) {
  const HardySpace s(2, 3, 2);
  gen::Rng rng(51);
  const CMatrix x = gen::gaussian_matrix(rng, s.dim(), 3);
  for (std::size_t i = 0; i < 2; ++i) {
    const CMatrix m = shift_matrix(s, i);
    EXPECT_LE(spectral_norm(apply_shift(s, i, x) - m * x), 1e-14);
    EXPECT_LE(spectral_norm(apply_shift_adjoint(s, i, x) - adj_mul(m, x)), 1e-14);
  }
  EXPECT_LE(spectral_norm(restrict_to_window(s, x, 1) - degree_window(s, 1).projector() * x),
            1e-14);
}

TEST(SymbolMatrix, MonomialIsShift) {
  const HardySpace s(2, 4, 1);
  const CMatrix m = symbol_matrix(s, s, z1().coefficients(4));
  EXPECT_LE(spectral_norm(m - shift_matrix(s, 0)), 0.0);
  const SymbolCoefficients c = z1().coefficients(4);
  EXPECT_TRUE(c.polynomial);
  EXPECT_EQ(c.tail_bound, 0.0);
}

TEST(SymbolMatrix, ConstantUnitaryIsBlockIdentity) {
  gen::Rng rng(52);
  const CMatrix w = gen::haar_unitary(rng, 2);
  const InnerSymbol u = InnerSymbol::unitary(2, w);
  const HardySpace s(2, 2, 2);
  const CMatrix m = symbol_matrix(s, s, u.coefficients(2));
  EXPECT_LE(spectral_norm(m - kron(CMatrix::identity(s.monomial_count()), w)), 1e-15);
}

TEST(SymbolMatrix, BlaschkeTailDecays) {
  const double a = 0.5;
  const InnerSymbol b = InnerSymbol::blaschke1(2, 0, {cplx(a)});
  const SymbolCoefficients c = b.coefficients(20);
  EXPECT_FALSE(c.polynomial);
  // The omitted coefficients have norm sqrt(1 - a^2) a^20.
  EXPECT_GE(c.tail_bound, std::sqrt(1.0 - a * a) * std::pow(a, 20) * (1.0 - 1e-9));
  EXPECT_LE(c.tail_bound, 2.0 * std::pow(a, 20));
  // Coefficient of z1^k is (1 - a^2) a^(k-1).
  EXPECT_NEAR(std::abs(c.terms.at({0, 0})(0, 0) + a), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(c.terms.at({3, 0})(0, 0) - (1 - a * a) * a * a), 0.0, 1e-12);
}

TEST(SymbolMatrix, TruncationsAgreeOnWindow) {
  const InnerSymbol theta = InnerSymbol::product({z1z2(), InnerSymbol::monomial({0, 1})});
  const int n = 5;
  const HardySpace small(2, n, 1);
  const HardySpace big(2, n + 1, 1);
  const CMatrix ms = symbol_matrix(small, small, theta.coefficients(n));
  const CMatrix mb = symbol_matrix(big, big, theta.coefficients(n + 1));
  const CMatrix e = inclusion(small, big);
  EXPECT_LE(spectral_norm(adj_mul(e, mb * e) - ms), 1e-13);
}

TEST(Symbols, EvaluationAndInnerness) {
  const std::vector<cplx> w{cplx(0.3, 0.1), cplx(-0.2, 0.5)};
  EXPECT_NEAR(std::abs(z1z2().eval(w)(0, 0) - w[0] * w[1]), 0.0, 1e-15);
  const cplx a(0.4, -0.3);
  const InnerSymbol b = InnerSymbol::blaschke1(2, 1, {a});
  EXPECT_NEAR(std::abs(b.eval(w)(0, 0) - (w[1] - a) / (1.0 - std::conj(a) * w[1])), 0.0, 1e-15);
  EXPECT_LE(b.torus_inner_residual(16).residual, 1e-13);
  const InnerSymbol half = InnerSymbol::product({z1(), InnerSymbol::unitary(2, CMatrix{{0.5}})});
  EXPECT_NEAR(half.torus_inner_residual(8).residual, 0.75, 1e-14);
}

TEST(Symbols, TorusCoefficientsRecoverPolynomial) {
  const InnerSymbol theta = InnerSymbol::monomial({2, 1});
  const auto grid = torus_grid(2, 8);
  std::vector<CMatrix> samples;
  for (const auto& z : grid) samples.push_back(theta.eval(z));
  const auto coeffs = torus_taylor_coefficients(2, 8, samples);
  for (const auto& [k, c] : coeffs) {
    const double expected = (k == MultiIndex{2, 1}) ? 1.0 : 0.0;
    EXPECT_NEAR(std::abs(c(0, 0) - expected), 0.0, 1e-14);
  }
}

TEST(QuotientModels, FirstCoordinateMonomial) {
  for (int n : {3, 5}) {
    const QuotientModel m = quotient_model(n, z1());
    EXPECT_EQ(m.quotient.dim(), static_cast<std::size_t>(n + 1));
    ASSERT_EQ(m.model_ops.size(), 2u);
    EXPECT_LE(spectral_norm(m.model_ops[0]), 1e-14);
    const auto sv = singular_values(m.model_ops[1]);
    int ones = 0;
    for (double s : sv) ones += std::abs(s - 1.0) < 1e-12 ? 1 : 0;
    EXPECT_EQ(ones, n);
    CMatrix p = CMatrix::identity(m.quotient.dim());
    for (int k = 0; k <= n; ++k) p = p * m.model_ops[1];
    EXPECT_LE(spectral_norm(p), 1e-14);
  }
}

TEST(QuotientModels, ConstantUnitaryHasTrivialQuotient) {
  const QuotientModel m = quotient_model(3, InnerSymbol::unitary(2, CMatrix::identity(2)));
  EXPECT_EQ(m.quotient.dim(), 0u);
  const StructuralReport r = structural_checks(m);
  EXPECT_TRUE(r.all_pass());
}

TEST(QuotientModels, ProductMonomialCount) {
  const QuotientModel m = quotient_model(4, z1z2());
  EXPECT_EQ(m.quotient.dim(), 9u);
}

TEST(QuotientModels, InvarianceOnWindow) {
  for (const InnerSymbol& theta : {z1(), z1z2(), InnerSymbol::monomial({2, 1})}) {
    const QuotientModel m = quotient_model(6, theta);
    const CMatrix ps = m.submodule.projector();
    const CMatrix pq = m.quotient.projector();
    const CMatrix w = degree_window(m.space, m.window_degree - 1).projector();
    for (std::size_t i = 0; i < 2; ++i) {
      const CMatrix& s = m.shifts[i];
      EXPECT_LE(spectral_norm(w * (CMatrix::identity(ps.rows()) - ps) * s * ps * w), 1e-13);
      EXPECT_LE(spectral_norm((CMatrix::identity(pq.rows()) - pq) * adj_mul(s, pq)), 1e-13);
    }
  }
}

TEST(Wandering, FirstCoordinateMonomialIsSpanOfZ1) {
  const QuotientModel m = quotient_model(5, z1());
  const Subspace w = wandering_subspace(m, {0, 1});
  ASSERT_EQ(w.dim(), 1u);
  EXPECT_LE(containment_residual(basis_vector(m.space, {1, 0}), w), 1e-12);
}

TEST(Wandering, ConstantUnitaryGivesConstants) {
  const QuotientModel m = quotient_model(3, InnerSymbol::unitary(2, CMatrix::identity(2)));
  const Subspace w = wandering_subspace(m, {0, 1});
  EXPECT_LE(subspace_distance(w, constants(m.space)), 1e-12);
}

TEST(Wandering, ProductMonomialSingleIndex) {
  const int n = 5;
  const QuotientModel m = quotient_model(n, z1z2());
  const Subspace w = wandering_subspace(m, {0});
  for (int b = 1; b < n; ++b)
    EXPECT_LE(containment_residual(basis_vector(m.space, {1, b}), w), 1e-12) << b;
  EXPECT_GE(containment_residual(basis_vector(m.space, {2, 1}), w), 0.99);
}

TEST(Wandering, ShiftInvarianceOutsideIndexSet) {
  const QuotientModel m = quotient_model(6, z1z2());
  const Subspace w = wandering_subspace(m, {0});
  const Subspace window = degree_window(m.space, m.window_degree - 1);
  const CMatrix inside = window.projector() * w.basis;
  const CMatrix shifted = apply_shift(m.space, 1, inside);
  EXPECT_LE(containment_residual(degree_window(m.space, m.window_degree - 1).projector() * shifted,
                                 w),
            1e-8);
}

TEST(Structural, FirstCoordinateMonomial) {
  const QuotientModel m = quotient_model(6, z1());
  const StructuralReport r = structural_checks(m);
  for (const auto& c : r.checks) EXPECT_LE(c.value, 1e-10) << c.name;
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.quotient_dim, 7u);
  EXPECT_EQ(r.wandering_dim, 1u);
  EXPECT_EQ(r.defect_dim, 1u);
}

TEST(Structural, ProductMonomialDimensionsAgree) {
  const QuotientModel m = quotient_model(6, z1z2());
  const StructuralReport r = structural_checks(m);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.wandering_dim, r.defect_dim);
}

TEST(Structural, BlockDiagonalWithConstant) {
  const InnerSymbol theta =
      InnerSymbol::block_diag({z1z2(), InnerSymbol::unitary(2, CMatrix::identity(1))});
  const QuotientModel m = quotient_model(5, theta);
  const StructuralReport r = structural_checks(m);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.constant_meet_dim, 1u);
  EXPECT_EQ(r.wandering_dim_reduced, r.defect_dim);
  EXPECT_FALSE(r.minimal);
}

TEST(Structural, BeurlingBatteryPassesOnGradedModels) {
  for (const InnerSymbol& theta : {z1(), z1z2(), InnerSymbol::monomial({2, 1})}) {
    const BeurlingBattery b = beurling_condition_battery(quotient_model(6, theta), 1);
    EXPECT_LE(b.product_residual, 1e-10);
    EXPECT_LE(b.isometry_residual, 1e-10);
    EXPECT_LE(b.invariance_residual, 1e-8);
  }
}

TEST(Structural, DefectSpaceOfFirstCoordinateModel) {
  // D_{2,C} is spanned by M_{z_2}^* applied to Theta E, inside the window.
  const QuotientModel m = quotient_model(6, z1());
  const CTuple c = model_tuple(m);
  const WindowMask mask = quotient_mask(m, 1);
  const CMatrix p = mask.projection;
  const CMatrix d = p * full_truncated_defect(c, 0) * p;
  EXPECT_GE(range_basis(d).dim(), 1u);
  EXPECT_LE(range_basis(d).dim(), 1u);
}

TEST(Growth, MonomialCounts) {
  const auto a = ahern_clark_growth(z1(), 1, 6);
  EXPECT_EQ(a, (std::vector<std::size_t>{2, 3, 4, 5, 6, 7}));
  const auto b = ahern_clark_growth(z1z2(), 1, 5);
  EXPECT_EQ(b, (std::vector<std::size_t>{3, 5, 7, 9, 11}));
  const auto c = ahern_clark_growth(InnerSymbol::unitary(2, CMatrix::identity(1)), 1, 4);
  EXPECT_EQ(c, (std::vector<std::size_t>{0, 0, 0, 0}));
}

}  // namespace
