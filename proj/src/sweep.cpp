// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

#include "rcslab/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rcslab/error.hpp"

namespace rcslab {

void FrequencySweep::validate() const {
  if (freqs_hz.size() != samples.size()) {
    throw FormatError("sweep has " + std::to_string(freqs_hz.size()) + " frequencies but " +
                      std::to_string(samples.size()) + " samples");
  }
  if (freqs_hz.size() < 2) throw FormatError("sweep needs at least two points");
  const double step = freqs_hz[1] - freqs_hz[0];
  if (!(step > 0.0)) throw FormatError("sweep grid is not strictly increasing");
  const double n = static_cast<double>(freqs_hz.size() - 1);
  for (std::size_t i = 0; i < freqs_hz.size(); ++i) {
    const double expected = freqs_hz[0] + step * static_cast<double>(i);
    const double scale = std::max(std::abs(expected), step * n);
    if (std::abs(freqs_hz[i] - expected) > 1e-9 * scale) {
      throw FormatError("sweep grid is not uniform at index " + std::to_string(i));
    }
  }
}

FrequencySweep FrequencySweep::zeros(double f_start_hz, double f_stop_hz, std::size_t n) {
  if (n < 2) throw DomainError("sweep needs at least two points");
  if (!(f_stop_hz > f_start_hz) || !(f_start_hz > 0.0)) {
    throw DomainError("sweep requires freq_stop > freq_start > 0");
  }
  FrequencySweep s;
  s.freqs_hz.resize(n);
  s.samples.assign(n, cplx{0.0, 0.0});
  const double step = (f_stop_hz - f_start_hz) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) s.freqs_hz[i] = f_start_hz + step * static_cast<double>(i);
  s.freqs_hz.back() = f_stop_hz;
  return s;
}

bool same_grid(const FrequencySweep& a, const FrequencySweep& b) {
  if (a.freqs_hz.size() != b.freqs_hz.size()) return false;
  for (std::size_t i = 0; i < a.freqs_hz.size(); ++i) {
    if (std::abs(a.freqs_hz[i] - b.freqs_hz[i]) > 1e-9 * std::abs(a.freqs_hz[i])) return false;
  }
  return true;
}

void AzimuthScan::validate() const {
  if (angles_deg.size() != sweeps.size()) {
    throw FormatError("scan has " + std::to_string(angles_deg.size()) + " angles but " +
                      std::to_string(sweeps.size()) + " sweeps");
  }
  if (sweeps.empty()) throw FormatError("scan is empty");
  for (std::size_t i = 1; i < angles_deg.size(); ++i) {
    if (!(angles_deg[i] > angles_deg[i - 1])) {
      throw FormatError("scan angles must be strictly increasing");
    }
  }
  for (const auto& s : sweeps) {
    s.validate();
    if (!same_grid(s, sweeps.front())) throw FormatError("scan sweeps use different grids");
  }
}

}  // namespace rcslab
