// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#pragma once

#include <complex>
#include <cstddef>

namespace polydisc::kernels {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2 };

// Row-major C = A * B with A (m x k), B (k x n), C (m x n). C is overwritten
// and must not alias A or B.
void zgemm(std::size_t m, std::size_t n, std::size_t k, const cplx* a,
           const cplx* b, cplx* c);

// y += alpha * x
void zaxpy(std::size_t n, cplx alpha, const cplx* x, cplx* y);

// sum_i conj(x_i) * y_i
cplx zdotc(std::size_t n, const cplx* x, const cplx* y);

// Reference implementations, always available.
void zgemm_scalar(std::size_t m, std::size_t n, std::size_t k, const cplx* a,
                  const cplx* b, cplx* c);
void zaxpy_scalar(std::size_t n, cplx alpha, const cplx* x, cplx* y);
cplx zdotc_scalar(std::size_t n, const cplx* x, const cplx* y);

// AVX2 + FMA implementations. Only callable when isa_available(Isa::Avx2).
void zgemm_avx2(std::size_t m, std::size_t n, std::size_t k, const cplx* a,
                const cplx* b, cplx* c);
void zaxpy_avx2(std::size_t n, cplx alpha, const cplx* x, cplx* y);
cplx zdotc_avx2(std::size_t n, const cplx* x, const cplx* y);

bool isa_compiled(Isa isa);
bool isa_available(Isa isa);
Isa active_isa();
const char* isa_name(Isa isa);

// Pin dispatch to one variant (tests and benchmarks). Returns false when the
// requested variant cannot run on this machine.
bool force_isa(Isa isa);
void reset_isa();

}  // namespace polydisc::kernels
