// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "polydisc/cmatrix.hpp"
#include "polydisc/tuple.hpp"

namespace polydisc::gen {

using Rng = std::mt19937_64;

// Standard complex Gaussian (E|z|^2 = 1).
cplx gaussian(Rng& rng);
CMatrix gaussian_matrix(Rng& rng, std::size_t rows, std::size_t cols);
// Haar-distributed unitary from the QR factorisation of a Gaussian matrix.
CMatrix haar_unitary(Rng& rng, std::size_t n);
// Uniform in the disc of the given radius.
cplx point_in_disc(Rng& rng, double radius);
std::vector<cplx> point_in_polydisc(Rng& rng, std::size_t n, double radius);

// Gaussian matrix scaled so that ||X|| <= 1 and rho(X) <= rho_max.
CMatrix random_pure_contraction(Rng& rng, std::size_t dim, double rho_max);

// S e_k = e_{k+1} on C^{N+1}, S e_N = 0.
CMatrix truncated_shift(std::size_t degree);
// (S (x) I, I (x) S) on C^{(N+1)^2}.
CTuple truncated_bishift(std::size_t degree, const Tolerances& tol = {});

// Compressed shifts on the span of m Szego kernels at random nodes of the
// polydisc of the given radius. Resamples until the Gram matrix condition
// is at most max_cond.
CTuple kernel_node_tuple(Rng& rng, std::size_t n, std::size_t m, double radius,
                         const Tolerances& tol = {}, double max_cond = 1e4);

// Commuting nilpotent contractions: random polynomials without constant
// term in one strictly upper triangular matrix.
CTuple nilpotent_tuple(Rng& rng, std::size_t n, std::size_t dim,
                       const Tolerances& tol = {});

// Commuting pair U A U^H, U p(A) U^H with A upper triangular, scaled to
// contractions with spectral radius at most rho_max.
CTuple triangular_pair(Rng& rng, std::size_t dim, double rho_max,
                       const Tolerances& tol = {});

// Pair (A (x) I, I (x) S_N) where A is the one-variable kernel-node tuple of
// `nodes` and S_N the truncated shift. Beurling on the window that drops
// the top degree of the second factor.
struct WindowedTuple {
  CTuple tuple;
  WindowMask mask;
};
WindowedTuple node_shift_model(const std::vector<cplx>& nodes, std::size_t degree,
                               const Tolerances& tol = {});

}  // namespace polydisc::gen
