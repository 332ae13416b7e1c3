// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "polydisc/kernels.hpp"

namespace polydisc::kernels {

#if !defined(POLYDISC_BUILD_AVX2)
void zgemm_avx2(std::size_t m, std::size_t n, std::size_t k, const cplx* a,
                const cplx* b, cplx* c) {
  zgemm_scalar(m, n, k, a, b, c);
}
void zaxpy_avx2(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  zaxpy_scalar(n, alpha, x, y);
}
cplx zdotc_avx2(std::size_t n, const cplx* x, const cplx* y) {
  return zdotc_scalar(n, x, y);
}
#endif

namespace {

bool cpu_has_avx2() {
#if defined(POLYDISC_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

// POLYDISC_ISA=scalar disables the vector path for the whole process.
Isa detect() {
  const char* env = std::getenv("POLYDISC_ISA");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return Isa::Scalar;
  return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

bool isa_compiled(Isa isa) {
#if defined(POLYDISC_BUILD_AVX2)
  (void)isa;
  return true;
#else
  return isa == Isa::Scalar;
#endif
}

bool isa_available(Isa isa) {
  if (isa == Isa::Scalar) return true;
  return isa_compiled(isa) && cpu_has_avx2();
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool force_isa(Isa isa) {
  if (!isa_available(isa)) return false;
  current().store(isa, std::memory_order_relaxed);
  return true;
}

void reset_isa() { current().store(detect(), std::memory_order_relaxed); }

void zgemm(std::size_t m, std::size_t n, std::size_t k, const cplx* a,
           const cplx* b, cplx* c) {
  if (active_isa() == Isa::Avx2) {
    zgemm_avx2(m, n, k, a, b, c);
  } else {
    zgemm_scalar(m, n, k, a, b, c);
  }
}

void zaxpy(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  if (active_isa() == Isa::Avx2) {
    zaxpy_avx2(n, alpha, x, y);
  } else {
    zaxpy_scalar(n, alpha, x, y);
  }
}

cplx zdotc(std::size_t n, const cplx* x, const cplx* y) {
  return active_isa() == Isa::Avx2 ? zdotc_avx2(n, x, y)
                                   : zdotc_scalar(n, x, y);
}

}  // namespace polydisc::kernels
