// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

// Absolute RCS from gated sweeps, referenced to a PEC sphere whose true RCS
// comes from the Mie series.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rcslab/mie.hpp"
#include "rcslab/sweep.hpp"

namespace rcslab::cal {

/// Per-frequency factor C(f) = sigma_sphere(f) / |S_sphere(f)|^2.
struct CalibrationReference {
  std::vector<double> freqs_hz;
  std::vector<double> factor;  ///< m^2 per |S|^2 unit, > 0
  mie::SphereSpec sphere{};
  /// Set when any grid frequency puts the sphere outside the optical region.
  bool region_warning = false;
};

/// Calibrated RCS versus azimuth, in m^2.
struct RcsPattern {
  std::vector<double> angles_deg;
  std::vector<double> rcs_m2;
  std::string freq_label;

  void validate() const;
};

struct AverageRcs {
  double mean_m2;
  double mean_dbsm;
};

/// Throws DegenerateReferenceError when any sphere sample has zero power.
CalibrationReference build_calibration(const FrequencySweep& sphere_sweep_gated,
                                       const mie::SphereSpec& sphere);

/// sigma(f) = C(f) |S(f)|^2.
std::vector<double> apply_calibration(const FrequencySweep& target_sweep_gated,
                                      const CalibrationReference& cal);

/// Per-angle mean of calibrated RCS over grid frequencies in [band_lo, band_hi].
RcsPattern pattern_from_scan(const AzimuthScan& scan_gated, const CalibrationReference& cal,
                             double band_lo_hz, double band_hi_hz);

/// Arithmetic mean over angles in m^2, and its dBsm value.
AverageRcs average_rcs(const RcsPattern& pattern);

/// Coherent mean of a multi-look scan, used to turn a sphere scan into one
/// reference sweep.
FrequencySweep coherent_mean(const AzimuthScan& scan);

}  // namespace rcslab::cal
