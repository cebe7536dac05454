// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

// Coherent point-scatterer target model and a synthetic compact-range
// chamber: target, transceiver leakage, antenna coupling, fixed chamber
// clutter and receiver noise, captured as VNA-style frequency sweeps over an
// azimuth turntable scan.
//
// Geometry: the radar looks along -x from (antenna_range, 0). Rotating the
// turntable by phi maps a target-frame point (x, y) to
// (x cos phi - y sin phi, x sin phi + y cos phi); its monostatic range is
// antenna_range minus the rotated x coordinate (plane-wave illumination).

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rcslab/mie.hpp"
#include "rcslab/sweep.hpp"

namespace rcslab::sim {

struct ScatteringCenter {
  double rcs_m2 = 0.0;  ///< >= 0
  double x_m = 0.0;
  double y_m = 0.0;
};

/// Isotropic point scatterers, optionally plus a PEC sphere centred on the
/// turntable axis whose frequency-dependent return comes from the Mie series.
struct TargetModel {
  std::string name;
  std::vector<ScatteringCenter> centers;
  std::optional<mie::SphereSpec> sphere;

  /// Throws DomainError on negative RCS or when there is nothing to scatter.
  void validate() const;
};

struct ScanGeometry {
  double antenna_range_m = 1.8288;  // 6 ft
  double azimuth_start_deg = 0.0;
  double azimuth_stop_deg = 358.0;
  double azimuth_step_deg = 2.0;

  void validate() const;
  /// start, start + step, ..., stop.
  std::vector<double> angles_deg() const;
};

struct SweepConfig {
  double freq_start_hz = 24e9;
  double freq_stop_hz = 26e9;
  std::size_t n_points = 401;

  void validate() const;
  FrequencySweep empty_sweep() const { return FrequencySweep::zeros(freq_start_hz, freq_stop_hz, n_points); }
};

/// A fixed-delay response a * exp(-j 2 pi f tau).
struct DelayTone {
  double amplitude = 0.0;
  double delay_s = 0.0;
};

struct ChamberArtifacts {
  DelayTone leakage;
  DelayTone coupling;
  std::vector<ScatteringCenter> background;  ///< chamber frame, never rotated
  double noise_std = 0.0;  ///< complex std: E|n|^2 = noise_std^2
  std::uint64_t seed = 0;
  /// Frequency-flat complex receive-chain gain applied to everything except noise.
  std::complex<double> gain{1.0, 0.0};

  void validate() const;
};

/// Noise streams are keyed by (seed, stream, angle index) so that each look
/// is reproducible independently of evaluation order.
enum class NoiseStream : std::uint32_t { kTarget = 0, kBackground = 1, kSphere = 2 };

/// Range from the phase reference to a target-frame point after rotation.
double monostatic_range(const ScatteringCenter& c, double look_angle_deg,
                        const ScanGeometry& geometry);

/// Sum_i sqrt(sigma_i) exp(-j 2 k R_i), plus the sphere return if present.
std::complex<double> coherent_amplitude(const TargetModel& target, double freq_hz,
                                        double look_angle_deg, const ScanGeometry& geometry);

/// |coherent_amplitude|^2 in m^2.
double coherent_rcs(const TargetModel& target, double freq_hz, double look_angle_deg,
                    const ScanGeometry& geometry);

/// One look as the VNA would record it.
FrequencySweep synth_sweep(const TargetModel& target, double look_angle_deg,
                           const ScanGeometry& geometry, const SweepConfig& sweep,
                           const ChamberArtifacts& artifacts,
                           NoiseStream stream = NoiseStream::kTarget, std::uint64_t look_index = 0);

/// One synth_sweep per azimuth step.
AzimuthScan synth_scan(const TargetModel& target, const ScanGeometry& geometry,
                       const SweepConfig& sweep, const ChamberArtifacts& artifacts,
                       NoiseStream stream = NoiseStream::kTarget);

/// Same chamber with the turntable empty: leakage, coupling, clutter and an
/// independent noise realization.
AzimuthScan synth_background_scan(const ScanGeometry& geometry, const SweepConfig& sweep,
                                  const ChamberArtifacts& artifacts);

}  // namespace rcslab::sim
