// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

// Elementwise and reduction kernels over interleaved complex<double> and
// double buffers. Every backend produces results bit-identical to the scalar
// reference: no FMA contraction, and reductions accumulate in four fixed
// lanes that are combined as (l0 + l1) + (l2 + l3).

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace rcslab::simd {

using cplx = std::complex<double>;

enum class Backend { kScalar, kAvx2, kNeon };

std::string_view backend_name(Backend b);

/// Whether the running CPU (and this build) can execute the backend.
bool backend_available(Backend b);

/// Backend used by the dispatching entry points below. Chosen on first use
/// from the best available backend.
Backend active_backend();

/// Overrides the dispatch choice; throws DomainError if unavailable.
void set_backend(Backend b);

struct KernelTable {
  // out[i] = a[i] - b[i]
  void (*sub)(const cplx* a, const cplx* b, cplx* out, std::size_t n);
  // out[i] = a[i] * w[i]
  void (*scale_real)(const cplx* a, const double* w, cplx* out, std::size_t n);
  // out[i] = |a[i]|^2
  void (*norm)(const cplx* a, double* out, std::size_t n);
  // out[i] = c[i] * |a[i]|^2
  void (*scaled_norm)(const cplx* a, const double* c, double* out, std::size_t n);
  // sum |a[i]|^2
  double (*energy)(const cplx* a, std::size_t n);
  // sum x[i]
  double (*sum)(const double* x, std::size_t n);
};

const KernelTable& scalar_kernels();
/// Null when the build does not contain the backend.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

const KernelTable& kernels_for(Backend b);

// Dispatching wrappers. Lengths are checked; mismatches throw FormatError.
void sub(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out);
void scale_real(std::span<const cplx> a, std::span<const double> w, std::span<cplx> out);
void norm(std::span<const cplx> a, std::span<double> out);
void scaled_norm(std::span<const cplx> a, std::span<const double> c, std::span<double> out);
double energy(std::span<const cplx> a);
double sum(std::span<const double> x);

}  // namespace rcslab::simd
