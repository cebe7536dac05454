// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "rcslab/error.hpp"

namespace rcslab::detail {
namespace {

struct FftwFree {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};
using FftwBuffer = std::unique_ptr<fftw_complex[], FftwFree>;

FftwBuffer make_buffer(std::size_t n) {
  auto* p = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
  if (p == nullptr) throw Error("fftw_malloc failed");
  return FftwBuffer(p);
}

struct PlanCache {
  std::mutex mu;  // planner calls are not thread-safe; execution is
  std::map<std::pair<std::size_t, int>, fftw_plan> plans;

  ~PlanCache() {
    for (auto& [key, plan] : plans) fftw_destroy_plan(plan);
  }

  // Plans are made on scratch arrays and executed with fftw_execute_dft on
  // other fftw_malloc'd arrays, which share the required alignment.
  fftw_plan get(std::size_t n, int sign) {
    std::lock_guard lock(mu);
    auto it = plans.find({n, sign});
    if (it != plans.end()) return it->second;
    auto in = make_buffer(n);
    auto out = make_buffer(n);
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), in.get(), out.get(), sign, FFTW_ESTIMATE);
    if (plan == nullptr) throw Error("fftw_plan_dft_1d failed");
    plans.emplace(std::make_pair(n, sign), plan);
    return plan;
  }
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

}  // namespace

std::vector<std::complex<double>> dft(std::span<const std::complex<double>> in, std::size_t n,
                                      FftDirection dir) {
  if (n == 0 || in.size() > n) throw FormatError("dft: input longer than transform length");
  const int sign = dir == FftDirection::kForward ? FFTW_FORWARD : FFTW_BACKWARD;
  fftw_plan plan = cache().get(n, sign);

  auto buf_in = make_buffer(n);
  auto buf_out = make_buffer(n);
  auto* src = reinterpret_cast<std::complex<double>*>(buf_in.get());
  std::copy(in.begin(), in.end(), src);
  std::fill(src + in.size(), src + n, std::complex<double>{0.0, 0.0});
  fftw_execute_dft(plan, buf_in.get(), buf_out.get());

  const auto* dst = reinterpret_cast<const std::complex<double>*>(buf_out.get());
  return {dst, dst + n};
}

}  // namespace rcslab::detail
