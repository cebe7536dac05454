// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

#include <atomic>
#include <string>

#include "rcslab/error.hpp"
#include "rcslab/simd/kernels.hpp"

namespace rcslab::simd {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend best_backend() {
  if (backend_available(Backend::kAvx2)) return Backend::kAvx2;
  if (backend_available(Backend::kNeon)) return Backend::kNeon;
  return Backend::kScalar;
}

std::atomic<const KernelTable*>& active_table() {
  static std::atomic<const KernelTable*> table{&kernels_for(best_backend())};
  return table;
}

std::atomic<Backend>& active_tag() {
  static std::atomic<Backend> tag{best_backend()};
  return tag;
}

void check_len(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw FormatError(std::string("simd::") + what + ": length mismatch (" + std::to_string(a) +
                      " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::kScalar: return "scalar";
    case Backend::kAvx2: return "avx2";
    case Backend::kNeon: return "neon";
  }
  return "unknown";
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::kScalar: return true;
    case Backend::kAvx2: return avx2_kernels() != nullptr && cpu_has_avx2();
    case Backend::kNeon: return neon_kernels() != nullptr;  // NEON is baseline on aarch64
  }
  return false;
}

const KernelTable& kernels_for(Backend b) {
  if (!backend_available(b)) {
    throw DomainError("simd backend '" + std::string(backend_name(b)) + "' is not available");
  }
  switch (b) {
    case Backend::kAvx2: return *avx2_kernels();
    case Backend::kNeon: return *neon_kernels();
    case Backend::kScalar: break;
  }
  return scalar_kernels();
}

Backend active_backend() { return active_tag().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  const KernelTable& table = kernels_for(b);
  active_table().store(&table, std::memory_order_relaxed);
  active_tag().store(b, std::memory_order_relaxed);
}

void sub(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
  check_len(a.size(), b.size(), "sub");
  check_len(a.size(), out.size(), "sub");
  active_table().load(std::memory_order_relaxed)->sub(a.data(), b.data(), out.data(), a.size());
}

void scale_real(std::span<const cplx> a, std::span<const double> w, std::span<cplx> out) {
  check_len(a.size(), w.size(), "scale_real");
  check_len(a.size(), out.size(), "scale_real");
  active_table().load(std::memory_order_relaxed)
      ->scale_real(a.data(), w.data(), out.data(), a.size());
}

void norm(std::span<const cplx> a, std::span<double> out) {
  check_len(a.size(), out.size(), "norm");
  active_table().load(std::memory_order_relaxed)->norm(a.data(), out.data(), a.size());
}

void scaled_norm(std::span<const cplx> a, std::span<const double> c, std::span<double> out) {
  check_len(a.size(), c.size(), "scaled_norm");
  check_len(a.size(), out.size(), "scaled_norm");
  active_table().load(std::memory_order_relaxed)
      ->scaled_norm(a.data(), c.data(), out.data(), a.size());
}

double energy(std::span<const cplx> a) {
  return active_table().load(std::memory_order_relaxed)->energy(a.data(), a.size());
}

double sum(std::span<const double> x) {
  return active_table().load(std::memory_order_relaxed)->sum(x.data(), x.size());
}

}  // namespace rcslab::simd
