// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

#include "rcslab/scatter_sim.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "rcslab/error.hpp"
#include "rcslab/units.hpp"

namespace rcslab::sim {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

void check_center(const ScatteringCenter& c, const char* what) {
  if (!(c.rcs_m2 >= 0.0) || !std::isfinite(c.rcs_m2)) {
    throw DomainError(std::string(what) + ": scattering center RCS must be >= 0");
  }
  if (!std::isfinite(c.x_m) || !std::isfinite(c.y_m)) {
    throw DomainError(std::string(what) + ": scattering center position must be finite");
  }
}

// exp(-j 2 k R) weighted by sqrt(sigma).
inline cplx point_return(double rcs_m2, double k, double range_m) {
  return std::polar(std::sqrt(rcs_m2), -2.0 * k * range_m);
}

inline cplx tone(const DelayTone& t, double freq_hz) {
  return std::polar(t.amplitude, -2.0 * std::numbers::pi * freq_hz * t.delay_s);
}

std::mt19937_64 noise_engine(std::uint64_t seed, NoiseStream stream, std::uint64_t look_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(look_index),
                    static_cast<std::uint32_t>(look_index >> 32)};
  return std::mt19937_64(seq);
}

// Chamber-side terms shared by target and background captures.
FrequencySweep synth_look(const TargetModel* target, double look_angle_deg,
                          const ScanGeometry& geometry, const SweepConfig& sweep,
                          const ChamberArtifacts& artifacts, NoiseStream stream,
                          std::uint64_t look_index) {
  FrequencySweep out = sweep.empty_sweep();
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double f = out.freqs_hz[i];
    const double k = wavenumber(f);
    cplx s = tone(artifacts.leakage, f) + tone(artifacts.coupling, f);
    for (const auto& c : artifacts.background) {
      s += point_return(c.rcs_m2, k, geometry.antenna_range_m - c.x_m);
    }
    if (target != nullptr) s += coherent_amplitude(*target, f, look_angle_deg, geometry);
    out.samples[i] = artifacts.gain * s;
  }
  if (artifacts.noise_std > 0.0) {
    auto engine = noise_engine(artifacts.seed, stream, look_index);
    std::normal_distribution<double> gauss(0.0, artifacts.noise_std / std::numbers::sqrt2);
    for (auto& s : out.samples) {
      const double re = gauss(engine);
      const double im = gauss(engine);
      s += cplx{re, im};
    }
  }
  return out;
}

AzimuthScan scan_of(const TargetModel* target, const ScanGeometry& geometry,
                    const SweepConfig& sweep, const ChamberArtifacts& artifacts,
                    NoiseStream stream) {
  AzimuthScan scan;
  scan.angles_deg = geometry.angles_deg();
  scan.sweeps.reserve(scan.angles_deg.size());
  for (std::size_t i = 0; i < scan.angles_deg.size(); ++i) {
    scan.sweeps.push_back(
        synth_look(target, scan.angles_deg[i], geometry, sweep, artifacts, stream, i));
  }
  return scan;
}

}  // namespace

void TargetModel::validate() const {
  if (centers.empty() && !sphere) throw DomainError("target model has no scattering centers");
  for (const auto& c : centers) check_center(c, "target");
  if (sphere && !(sphere->radius_m > 0.0)) throw DomainError("target sphere radius must be > 0");
}

void ScanGeometry::validate() const {
  if (!(antenna_range_m > 0.0)) throw DomainError("antenna range must be > 0");
  if (!(azimuth_step_deg > 0.0)) throw DomainError("azimuth step must be > 0");
  if (azimuth_stop_deg < azimuth_start_deg) throw DomainError("azimuth stop precedes start");
  const double steps = (azimuth_stop_deg - azimuth_start_deg) / azimuth_step_deg;
  if (std::abs(steps - std::round(steps)) > 1e-9 * std::max(1.0, steps)) {
    throw DomainError("azimuth span is not an integer multiple of the step");
  }
}

std::vector<double> ScanGeometry::angles_deg() const {
  validate();
  const auto count = static_cast<std::size_t>(
      std::llround((azimuth_stop_deg - azimuth_start_deg) / azimuth_step_deg)) + 1;
  std::vector<double> angles(count);
  for (std::size_t i = 0; i < count; ++i) {
    angles[i] = azimuth_start_deg + azimuth_step_deg * static_cast<double>(i);
  }
  return angles;
}

void SweepConfig::validate() const {
  if (!(freq_start_hz > 0.0) || !(freq_stop_hz > freq_start_hz)) {
    throw DomainError("sweep requires freq_stop > freq_start > 0");
  }
  if (n_points < 2) throw DomainError("sweep requires at least two points");
}

void ChamberArtifacts::validate() const {
  for (const DelayTone* t : {&leakage, &coupling}) {
    if (!(t->amplitude >= 0.0) || !(t->delay_s >= 0.0)) {
      throw DomainError("leakage/coupling amplitude and delay must be >= 0");
    }
  }
  for (const auto& c : background) check_center(c, "background");
  if (!(noise_std >= 0.0)) throw DomainError("noise_std must be >= 0");
}

double monostatic_range(const ScatteringCenter& c, double look_angle_deg,
                        const ScanGeometry& geometry) {
  const double phi = std::fmod(look_angle_deg, 360.0) * kDegToRad;
  const double x_rot = c.x_m * std::cos(phi) - c.y_m * std::sin(phi);
  return geometry.antenna_range_m - x_rot;
}

std::complex<double> coherent_amplitude(const TargetModel& target, double freq_hz,
                                        double look_angle_deg, const ScanGeometry& geometry) {
  if (target.centers.empty() && !target.sphere) {
    throw DomainError("coherent_rcs: target model has no scattering centers");
  }
  if (!(freq_hz > 0.0)) throw DomainError("coherent_rcs: frequency must be > 0");
  const double k = wavenumber(freq_hz);
  cplx total{0.0, 0.0};
  for (const auto& c : target.centers) {
    total += point_return(c.rcs_m2, k, monostatic_range(c, look_angle_deg, geometry));
  }
  if (target.sphere) {
    total += mie::backscatter_amplitude(*target.sphere, freq_hz) *
             std::polar(1.0, -2.0 * k * geometry.antenna_range_m);
  }
  return total;
}

double coherent_rcs(const TargetModel& target, double freq_hz, double look_angle_deg,
                    const ScanGeometry& geometry) {
  return std::norm(coherent_amplitude(target, freq_hz, look_angle_deg, geometry));
}

FrequencySweep synth_sweep(const TargetModel& target, double look_angle_deg,
                           const ScanGeometry& geometry, const SweepConfig& sweep,
                           const ChamberArtifacts& artifacts, NoiseStream stream,
                           std::uint64_t look_index) {
  target.validate();
  geometry.validate();
  sweep.validate();
  artifacts.validate();
  return synth_look(&target, look_angle_deg, geometry, sweep, artifacts, stream, look_index);
}

AzimuthScan synth_scan(const TargetModel& target, const ScanGeometry& geometry,
                       const SweepConfig& sweep, const ChamberArtifacts& artifacts,
                       NoiseStream stream) {
  target.validate();
  sweep.validate();
  artifacts.validate();
  return scan_of(&target, geometry, sweep, artifacts, stream);
}

AzimuthScan synth_background_scan(const ScanGeometry& geometry, const SweepConfig& sweep,
                                  const ChamberArtifacts& artifacts) {
  sweep.validate();
  artifacts.validate();
  return scan_of(nullptr, geometry, sweep, artifacts, NoiseStream::kBackground);
}

}  // namespace rcslab::sim
