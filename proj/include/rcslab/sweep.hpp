// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace rcslab {

using cplx = std::complex<double>;

/// Complex transfer-function samples over a uniform frequency grid; one look.
struct FrequencySweep {
  std::vector<double> freqs_hz;
  std::vector<cplx> samples;

  std::size_t size() const noexcept { return samples.size(); }
  double freq_step() const { return freqs_hz.at(1) - freqs_hz.at(0); }

  /// Throws FormatError unless lengths match and the grid is strictly
  /// increasing and uniform to 1e-9 relative (n >= 2).
  void validate() const;

  /// Grid f_start + i * step for i in [0, n), samples zeroed.
  static FrequencySweep zeros(double f_start_hz, double f_stop_hz, std::size_t n);
};

/// True when both grids have the same length and agree to 1e-9 relative.
bool same_grid(const FrequencySweep& a, const FrequencySweep& b);

/// Sweeps indexed by turntable azimuth, all on one frequency grid.
struct AzimuthScan {
  std::vector<double> angles_deg;
  std::vector<FrequencySweep> sweeps;

  std::size_t size() const noexcept { return sweeps.size(); }

  /// Throws FormatError unless angles are strictly increasing, counts match
  /// and every sweep is valid and shares the first sweep's grid.
  void validate() const;
};

}  // namespace rcslab
