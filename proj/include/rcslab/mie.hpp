// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

// Monostatic RCS of a perfectly conducting sphere: exact Mie series plus the
// Rayleigh and optical-region approximations.

#pragma once

#include <complex>
#include <string_view>
#include <vector>

namespace rcslab::mie {

struct SphereSpec {
  double radius_m;  ///< must be > 0
};

enum class ScatteringRegion { kRayleigh, kMie, kOptical };

std::string_view region_name(ScatteringRegion r);

/// Riccati-Hankel function of the second kind, H_n(x) = x * h_n^(2)(x), and
/// its derivative with respect to x.
struct RiccatiHankel {
  std::complex<double> value;
  std::complex<double> derivative;
};

/// Orders 1..n_max (element i holds order i + 1), by upward recurrence from
/// H_0 = i e^{-ix} and H_1 = (i/x - 1) e^{-ix}.
std::vector<RiccatiHankel> riccati_hankel2_sequence(double x, int n_max);

/// Series length ceil(ka + 4 (ka)^(1/3) + 2).
int wiscombe_terms(double ka);

/// Complex backscatter amplitude A with sigma = |A|^2, phase referenced to the
/// sphere centre. `extra_terms` extends the series past the Wiscombe cutoff.
std::complex<double> backscatter_amplitude(const SphereSpec& sphere, double freq_hz,
                                           int extra_terms = 0);

/// Exact Mie-series RCS in m^2.
double sphere_rcs_exact(const SphereSpec& sphere, double freq_hz, int extra_terms = 0);

/// (9 lambda^2 / 4 pi) (ka)^6 regardless of region.
double sphere_rcs_rayleigh(const SphereSpec& sphere, double freq_hz);

/// pi a^2.
double sphere_rcs_optical(const SphereSpec& sphere);

/// Rayleigh iff ka <= 0.5, optical iff a > 2 lambda, Mie otherwise.
ScatteringRegion classify_region(const SphereSpec& sphere, double freq_hz);

}  // namespace rcslab::mie
