// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

// Thin FFTW wrapper. Unnormalized in both directions; sign -1 is forward.

#pragma once

#include <complex>
#include <span>
#include <vector>

namespace rcslab::detail {

enum class FftDirection { kForward, kBackward };

/// out[m] = sum_k in[k] exp(-+ j 2 pi k m / n); `in` is zero-extended to n.
std::vector<std::complex<double>> dft(std::span<const std::complex<double>> in, std::size_t n,
                                      FftDirection dir);

}  // namespace rcslab::detail
