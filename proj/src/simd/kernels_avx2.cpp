// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

// Built with -mavx2 and without -mfma; see kernels.hpp for the bit-exactness
// contract against the scalar reference.

#include "rcslab/simd/kernels.hpp"

#if defined(RCSLAB_HAVE_AVX2)

#include <immintrin.h>

namespace rcslab::simd {
namespace {

inline const double* raw(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* raw(cplx* p) { return reinterpret_cast<double*>(p); }

void sub_avx2(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  const double* pa = raw(a);
  const double* pb = raw(b);
  double* po = raw(out);
  const std::size_t m = 2 * n;
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    _mm256_storeu_pd(po + i, _mm256_sub_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i)));
  }
  for (; i < m; ++i) po[i] = pa[i] - pb[i];
}

void scale_real_avx2(const cplx* a, const double* w, cplx* out, std::size_t n) {
  const double* pa = raw(a);
  double* po = raw(out);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m128d w01 = _mm_loadu_pd(w + i);
    const __m256d ww = _mm256_set_m128d(_mm_unpackhi_pd(w01, w01), _mm_unpacklo_pd(w01, w01));
    _mm256_storeu_pd(po + 2 * i, _mm256_mul_pd(_mm256_loadu_pd(pa + 2 * i), ww));
  }
  for (; i < n; ++i) {
    po[2 * i] = pa[2 * i] * w[i];
    po[2 * i + 1] = pa[2 * i + 1] * w[i];
  }
}

// |a|^2 for four complex values, in order.
inline __m256d norm4(const double* p) {
  const __m256d v0 = _mm256_loadu_pd(p);
  const __m256d v1 = _mm256_loadu_pd(p + 4);
  const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
  return _mm256_permute4x64_pd(h, _MM_SHUFFLE(3, 1, 2, 0));
}

void norm_avx2(const cplx* a, double* out, std::size_t n) {
  const double* pa = raw(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(out + i, norm4(pa + 2 * i));
  for (; i < n; ++i) {
    const double re2 = pa[2 * i] * pa[2 * i];
    const double im2 = pa[2 * i + 1] * pa[2 * i + 1];
    out[i] = re2 + im2;
  }
}

void scaled_norm_avx2(const cplx* a, const double* c, double* out, std::size_t n) {
  const double* pa = raw(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(c + i), norm4(pa + 2 * i)));
  }
  for (; i < n; ++i) {
    const double re2 = pa[2 * i] * pa[2 * i];
    const double im2 = pa[2 * i + 1] * pa[2 * i + 1];
    out[i] = c[i] * (re2 + im2);
  }
}

inline double combine_lanes(__m256d acc) {
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

double energy_avx2(const cplx* a, std::size_t n) {
  const double* pa = raw(a);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(pa + 2 * i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
  }
  double total = combine_lanes(acc);
  for (; i < n; ++i) {
    const double re2 = pa[2 * i] * pa[2 * i];
    const double im2 = pa[2 * i + 1] * pa[2 * i + 1];
    total += re2 + im2;
  }
  return total;
}

double sum_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double total = combine_lanes(acc);
  for (; i < n; ++i) total += x[i];
  return total;
}

}  // namespace

const KernelTable* avx2_kernels() {
  static const KernelTable table{sub_avx2,         scale_real_avx2, norm_avx2,
                                 scaled_norm_avx2, energy_avx2,     sum_avx2};
  return &table;
}

}  // namespace rcslab::simd

#else

namespace rcslab::simd {
const KernelTable* avx2_kernels() { return nullptr; }
}  // namespace rcslab::simd

#endif
