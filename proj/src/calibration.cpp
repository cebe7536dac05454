// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

#include "rcslab/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <sstream>

#include "rcslab/error.hpp"
#include "rcslab/simd/kernels.hpp"
#include "rcslab/units.hpp"

namespace rcslab::cal {
namespace {

void check_grid(const FrequencySweep& sweep, const CalibrationReference& cal) {
  sweep.validate();
  if (sweep.freqs_hz.size() != cal.freqs_hz.size()) {
    throw FormatError("calibration grid has " + std::to_string(cal.freqs_hz.size()) +
                      " points, sweep has " + std::to_string(sweep.freqs_hz.size()));
  }
  for (std::size_t i = 0; i < cal.freqs_hz.size(); ++i) {
    if (std::abs(sweep.freqs_hz[i] - cal.freqs_hz[i]) > 1e-9 * cal.freqs_hz[i]) {
      throw FormatError("calibration grid does not match the sweep grid");
    }
  }
}

std::string band_label(double lo, double hi) {
  std::ostringstream os;
  os.precision(6);
  if (lo == hi) {
    os << lo / 1e9 << " GHz";
  } else {
    os << lo / 1e9 << "-" << hi / 1e9 << " GHz";
  }
  return os.str();
}

}  // namespace

void RcsPattern::validate() const {
  if (angles_deg.size() != rcs_m2.size()) throw FormatError("pattern angle/RCS count mismatch");
  for (std::size_t i = 0; i < angles_deg.size(); ++i) {
    if (angles_deg[i] < 0.0 || angles_deg[i] >= 360.0) {
      throw FormatError("pattern angles must lie in [0, 360)");
    }
    if (i > 0 && !(angles_deg[i] > angles_deg[i - 1])) {
      throw FormatError("pattern angles must be strictly increasing");
    }
    if (!(rcs_m2[i] >= 0.0)) throw FormatError("pattern RCS must be >= 0");
  }
}

CalibrationReference build_calibration(const FrequencySweep& sphere_sweep_gated,
                                       const mie::SphereSpec& sphere) {
  sphere_sweep_gated.validate();
  CalibrationReference cal;
  cal.sphere = sphere;
  cal.freqs_hz = sphere_sweep_gated.freqs_hz;
  cal.factor.resize(cal.freqs_hz.size());

  std::vector<double> power(sphere_sweep_gated.size());
  simd::norm(sphere_sweep_gated.samples, power);
  for (std::size_t i = 0; i < power.size(); ++i) {
    const double f = cal.freqs_hz[i];
    if (!(power[i] > 0.0) || !std::isfinite(power[i])) {
      throw DegenerateReferenceError("sphere sweep has zero power at " + std::to_string(f) +
                                     " Hz");
    }
    cal.factor[i] = mie::sphere_rcs_exact(sphere, f) / power[i];
    if (!std::isfinite(cal.factor[i]) || !(cal.factor[i] > 0.0)) {
      throw DegenerateReferenceError("non-finite calibration factor at " + std::to_string(f) +
                                     " Hz");
    }
    if (mie::classify_region(sphere, f) != mie::ScatteringRegion::kOptical) {
      cal.region_warning = true;
    }
  }
  return cal;
}

std::vector<double> apply_calibration(const FrequencySweep& target_sweep_gated,
                                      const CalibrationReference& cal) {
  check_grid(target_sweep_gated, cal);
  std::vector<double> rcs(target_sweep_gated.size());
  simd::scaled_norm(target_sweep_gated.samples, cal.factor, rcs);
  return rcs;
}

RcsPattern pattern_from_scan(const AzimuthScan& scan_gated, const CalibrationReference& cal,
                             double band_lo_hz, double band_hi_hz) {
  scan_gated.validate();
  if (band_hi_hz < band_lo_hz) throw DomainError("band upper edge is below the lower edge");

  const auto& grid = cal.freqs_hz;
  const double tol = 1e-9 * std::max(std::abs(band_lo_hz), std::abs(band_hi_hz));
  std::size_t first = grid.size();
  std::size_t last = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] >= band_lo_hz - tol && grid[i] <= band_hi_hz + tol) {
      first = std::min(first, i);
      last = i;
    }
  }
  if (first == grid.size()) {
    throw DomainError("band " + band_label(band_lo_hz, band_hi_hz) +
                      " contains no grid frequencies");
  }
  const std::size_t count = last - first + 1;

  RcsPattern p;
  p.freq_label = band_label(band_lo_hz, band_hi_hz);
  p.angles_deg.reserve(scan_gated.size());
  p.rcs_m2.reserve(scan_gated.size());
  for (std::size_t a = 0; a < scan_gated.size(); ++a) {
    const auto rcs = apply_calibration(scan_gated.sweeps[a], cal);
    const double mean =
        simd::sum(std::span<const double>(rcs).subspan(first, count)) / static_cast<double>(count);
    const double angle = std::fmod(std::fmod(scan_gated.angles_deg[a], 360.0) + 360.0, 360.0);
    p.angles_deg.push_back(angle);
    p.rcs_m2.push_back(mean);
  }
  p.validate();
  return p;
}

AverageRcs average_rcs(const RcsPattern& pattern) {
  if (pattern.rcs_m2.empty()) throw DomainError("cannot average an empty pattern");
  const double mean = simd::sum(pattern.rcs_m2) / static_cast<double>(pattern.rcs_m2.size());
  return {mean, to_dbsm(mean)};
}

FrequencySweep coherent_mean(const AzimuthScan& scan) {
  scan.validate();
  FrequencySweep out = scan.sweeps.front();
  for (std::size_t a = 1; a < scan.size(); ++a) {
    for (std::size_t i = 0; i < out.size(); ++i) out.samples[i] += scan.sweeps[a].samples[i];
  }
  const double inv = 1.0 / static_cast<double>(scan.size());
  for (auto& s : out.samples) s *= inv;
  return out;
}

}  // namespace rcslab::cal
