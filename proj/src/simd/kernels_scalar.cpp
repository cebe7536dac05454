// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

#include "rcslab/simd/kernels.hpp"

namespace rcslab::simd {
namespace {

// Raw re/im access keeps the arithmetic explicit (std::norm and operator*
// are free to reassociate or use library helpers).
inline const double* raw(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* raw(cplx* p) { return reinterpret_cast<double*>(p); }

void sub_scalar(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  const double* pa = raw(a);
  const double* pb = raw(b);
  double* po = raw(out);
  for (std::size_t i = 0; i < 2 * n; ++i) po[i] = pa[i] - pb[i];
}

void scale_real_scalar(const cplx* a, const double* w, cplx* out, std::size_t n) {
  const double* pa = raw(a);
  double* po = raw(out);
  for (std::size_t i = 0; i < n; ++i) {
    po[2 * i] = pa[2 * i] * w[i];
    po[2 * i + 1] = pa[2 * i + 1] * w[i];
  }
}

void norm_scalar(const cplx* a, double* out, std::size_t n) {
  const double* pa = raw(a);
  for (std::size_t i = 0; i < n; ++i) {
    const double re2 = pa[2 * i] * pa[2 * i];
    const double im2 = pa[2 * i + 1] * pa[2 * i + 1];
    out[i] = re2 + im2;
  }
}

void scaled_norm_scalar(const cplx* a, const double* c, double* out, std::size_t n) {
  const double* pa = raw(a);
  for (std::size_t i = 0; i < n; ++i) {
    const double re2 = pa[2 * i] * pa[2 * i];
    const double im2 = pa[2 * i + 1] * pa[2 * i + 1];
    out[i] = c[i] * (re2 + im2);
  }
}

// Lane layout mirrors one 256-bit register holding two complex values:
// lanes {re0, im0, re1, im1}.
double energy_scalar(const cplx* a, std::size_t n) {
  const double* pa = raw(a);
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    for (int l = 0; l < 4; ++l) {
      const double v = pa[2 * i + l];
      const double sq = v * v;
      lane[l] = lane[l] + sq;
    }
  }
  double total = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (; i < n; ++i) {
    const double re2 = pa[2 * i] * pa[2 * i];
    const double im2 = pa[2 * i + 1] * pa[2 * i + 1];
    total += re2 + im2;
  }
  return total;
}

double sum_scalar(const double* x, std::size_t n) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (int l = 0; l < 4; ++l) lane[l] = lane[l] + x[i + l];
  }
  double total = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (; i < n; ++i) total += x[i];
  return total;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{sub_scalar,         scale_real_scalar, norm_scalar,
                                 scaled_norm_scalar, energy_scalar,     sum_scalar};
  return table;
}

}  // namespace rcslab::simd
