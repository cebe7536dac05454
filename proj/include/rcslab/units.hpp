// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rcslab {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s

/// Smallest RCS that is reported in dB form; -60 dBsm.
inline constexpr double kRcsFloorM2 = 1e-6;

inline double wavelength(double freq_hz) { return kSpeedOfLight / freq_hz; }
inline double wavenumber(double freq_hz) { return 2.0 * std::numbers::pi * freq_hz / kSpeedOfLight; }

inline double to_dbsm(double rcs_m2) { return 10.0 * std::log10(rcs_m2); }
inline double from_dbsm(double dbsm) { return std::pow(10.0, dbsm / 10.0); }

/// dBsm with the -60 dBsm floor applied; total over rcs >= 0.
inline double to_dbsm_clamped(double rcs_m2) { return to_dbsm(std::max(rcs_m2, kRcsFloorM2)); }

/// Two-way propagation delay to a range.
inline double range_to_delay(double range_m) { return 2.0 * range_m / kSpeedOfLight; }
inline double delay_to_range(double delay_s) { return 0.5 * delay_s * kSpeedOfLight; }

}  // namespace rcslab
