// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors
//
// Built with -mavx2 -mfma. Nothing here may run before the dispatcher has
// confirmed CPU support.

#include <immintrin.h>

#include "polydisc/kernels.hpp"

namespace polydisc::kernels {

namespace {

// One __m256d holds two complex numbers as [re0, im0, re1, im1].
// (ar + i ai) * (br + i bi) for both lanes.
inline __m256d cmul(__m256d ar, __m256d ai, __m256d b) {
  const __m256d swapped = _mm256_permute_pd(b, 0x5);
  const __m256d t = _mm256_mul_pd(ai, swapped);
  return _mm256_fmaddsub_pd(ar, b, t);
}

inline __m256d cmadd(__m256d ar, __m256d ai, __m256d b, __m256d acc) {
  return _mm256_add_pd(acc, cmul(ar, ai, b));
}

}  // namespace

void zgemm_avx2(std::size_t m, std::size_t n, std::size_t k, const cplx* a,
                const cplx* b, cplx* c) {
  const double* bd = reinterpret_cast<const double*>(b);
  double* cd = reinterpret_cast<double*>(c);
  for (std::size_t i = 0; i < m; ++i) {
    const cplx* arow = a + i * k;
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
      __m256d acc0 = _mm256_setzero_pd();
      __m256d acc1 = _mm256_setzero_pd();
      for (std::size_t p = 0; p < k; ++p) {
        const __m256d ar = _mm256_set1_pd(arow[p].real());
        const __m256d ai = _mm256_set1_pd(arow[p].imag());
        const double* bp = bd + 2 * (p * n + j);
        acc0 = cmadd(ar, ai, _mm256_loadu_pd(bp), acc0);
        acc1 = cmadd(ar, ai, _mm256_loadu_pd(bp + 4), acc1);
      }
      _mm256_storeu_pd(cd + 2 * (i * n + j), acc0);
      _mm256_storeu_pd(cd + 2 * (i * n + j) + 4, acc1);
    }
    for (; j + 2 <= n; j += 2) {
      __m256d acc = _mm256_setzero_pd();
      for (std::size_t p = 0; p < k; ++p) {
        const __m256d ar = _mm256_set1_pd(arow[p].real());
        const __m256d ai = _mm256_set1_pd(arow[p].imag());
        acc = cmadd(ar, ai, _mm256_loadu_pd(bd + 2 * (p * n + j)), acc);
      }
      _mm256_storeu_pd(cd + 2 * (i * n + j), acc);
    }
    for (; j < n; ++j) {
      double re = 0.0;
      double im = 0.0;
      for (std::size_t p = 0; p < k; ++p) {
        const double ar = arow[p].real();
        const double ai = arow[p].imag();
        const double br = b[p * n + j].real();
        const double bi = b[p * n + j].imag();
        re += ar * br - ai * bi;
        im += ar * bi + ai * br;
      }
      c[i * n + j] = cplx(re, im);
    }
  }
}

void zaxpy_avx2(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, cmadd(ar, ai, xv, yv));
  }
  if (i < n) zaxpy_scalar(n - i, alpha, x + i, y + i);
}

cplx zdotc_avx2(std::size_t n, const cplx* x, const cplx* y) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  // same[l] accumulates x*y lane-wise: [xr*yr, xi*yi];
  // cross[l] accumulates x*swap(y):   [xr*yi, xi*yr].
  __m256d same = _mm256_setzero_pd();
  __m256d cross = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    same = _mm256_fmadd_pd(xv, yv, same);
    cross = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0x5), cross);
  }
  alignas(32) double s[4];
  alignas(32) double t[4];
  _mm256_store_pd(s, same);
  _mm256_store_pd(t, cross);
  cplx out((s[0] + s[2]) + (s[1] + s[3]), (t[0] + t[2]) - (t[1] + t[3]));
  if (i < n) out += zdotc_scalar(n - i, x + i, y + i);
  return out;
}

}  // namespace polydisc::kernels
