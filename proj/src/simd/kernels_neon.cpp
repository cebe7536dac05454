// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

#include "rcslab/simd/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

namespace rcslab::simd {
namespace {

inline const double* raw(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* raw(cplx* p) { return reinterpret_cast<double*>(p); }

void sub_neon(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  const double* pa = raw(a);
  const double* pb = raw(b);
  double* po = raw(out);
  for (std::size_t i = 0; i < n; ++i) {
    vst1q_f64(po + 2 * i, vsubq_f64(vld1q_f64(pa + 2 * i), vld1q_f64(pb + 2 * i)));
  }
}

void scale_real_neon(const cplx* a, const double* w, cplx* out, std::size_t n) {
  const double* pa = raw(a);
  double* po = raw(out);
  for (std::size_t i = 0; i < n; ++i) {
    vst1q_f64(po + 2 * i, vmulq_n_f64(vld1q_f64(pa + 2 * i), w[i]));
  }
}

void norm_neon(const cplx* a, double* out, std::size_t n) {
  const double* pa = raw(a);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t v = vld1q_f64(pa + 2 * i);
    out[i] = vaddvq_f64(vmulq_f64(v, v));
  }
}

void scaled_norm_neon(const cplx* a, const double* c, double* out, std::size_t n) {
  const double* pa = raw(a);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t v = vld1q_f64(pa + 2 * i);
    out[i] = c[i] * vaddvq_f64(vmulq_f64(v, v));
  }
}

// Two q-registers stand in for the four reference lanes.
double energy_neon(const cplx* a, std::size_t n) {
  const double* pa = raw(a);
  float64x2_t lo = vdupq_n_f64(0.0);
  float64x2_t hi = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t v0 = vld1q_f64(pa + 2 * i);
    const float64x2_t v1 = vld1q_f64(pa + 2 * i + 2);
    lo = vaddq_f64(lo, vmulq_f64(v0, v0));
    hi = vaddq_f64(hi, vmulq_f64(v1, v1));
  }
  double total = vaddvq_f64(lo) + vaddvq_f64(hi);
  for (; i < n; ++i) {
    const double re2 = pa[2 * i] * pa[2 * i];
    const double im2 = pa[2 * i + 1] * pa[2 * i + 1];
    total += re2 + im2;
  }
  return total;
}

double sum_neon(const double* x, std::size_t n) {
  float64x2_t lo = vdupq_n_f64(0.0);
  float64x2_t hi = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    lo = vaddq_f64(lo, vld1q_f64(x + i));
    hi = vaddq_f64(hi, vld1q_f64(x + i + 2));
  }
  double total = vaddvq_f64(lo) + vaddvq_f64(hi);
  for (; i < n; ++i) total += x[i];
  return total;
}

}  // namespace

const KernelTable* neon_kernels() {
  static const KernelTable table{sub_neon,         scale_real_neon, norm_neon,
                                 scaled_norm_neon, energy_neon,     sum_neon};
  return &table;
}

}  // namespace rcslab::simd

#else

namespace rcslab::simd {
const KernelTable* neon_kernels() { return nullptr; }
}  // namespace rcslab::simd

#endif
