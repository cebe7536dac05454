// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

#include "rcslab/mie.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rcslab/error.hpp"
#include "rcslab/units.hpp"

namespace rcslab::mie {
namespace {

using cplx = std::complex<double>;

void check_sphere(const SphereSpec& sphere) {
  if (!(sphere.radius_m > 0.0) || !std::isfinite(sphere.radius_m)) {
    throw DomainError("sphere radius must be positive and finite, got " +
                      std::to_string(sphere.radius_m));
  }
}

void check_freq(double freq_hz) {
  if (!(freq_hz > 0.0) || !std::isfinite(freq_hz)) {
    throw DomainError("frequency must be positive and finite, got " + std::to_string(freq_hz));
  }
}

// Sum_{n} (-1)^n (2n+1) / (H_n'(x) H_n(x)).
cplx mie_series(double x, int n_max) {
  const auto terms = riccati_hankel2_sequence(x, n_max);
  cplx total{0.0, 0.0};
  for (int n = 1; n <= n_max; ++n) {
    const auto& h = terms[static_cast<std::size_t>(n - 1)];
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    total += sign * (2.0 * n + 1.0) / (h.derivative * h.value);
  }
  return total;
}

}  // namespace

std::string_view region_name(ScatteringRegion r) {
  switch (r) {
    case ScatteringRegion::kRayleigh: return "rayleigh";
    case ScatteringRegion::kMie: return "mie";
    case ScatteringRegion::kOptical: return "optical";
  }
  return "unknown";
}

std::vector<RiccatiHankel> riccati_hankel2_sequence(double x, int n_max) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("riccati_hankel2_sequence: x must be positive, got " + std::to_string(x));
  }
  if (n_max < 1) {
    throw DomainError("riccati_hankel2_sequence: n_max must be >= 1, got " +
                      std::to_string(n_max));
  }
  const cplx j{0.0, 1.0};
  const cplx phase = std::exp(-j * x);
  cplx prev = j * phase;                      // H_0
  cplx curr = (j / x - 1.0) * phase;          // H_1

  std::vector<RiccatiHankel> out;
  out.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    out.push_back({curr, prev - (static_cast<double>(n) / x) * curr});
    const cplx next = ((2.0 * n + 1.0) / x) * curr - prev;
    prev = curr;
    curr = next;
  }
  return out;
}

int wiscombe_terms(double ka) {
  return static_cast<int>(std::ceil(ka + 4.0 * std::cbrt(ka) + 2.0));
}

std::complex<double> backscatter_amplitude(const SphereSpec& sphere, double freq_hz,
                                           int extra_terms) {
  check_sphere(sphere);
  check_freq(freq_hz);
  const double lambda = wavelength(freq_hz);
  const double ka = wavenumber(freq_hz) * sphere.radius_m;
  const int n_max = wiscombe_terms(ka) + std::max(extra_terms, 0);
  // |lambda / sqrt(4 pi) * S|^2 = lambda^2 / (4 pi) |S|^2
  return (lambda / std::sqrt(4.0 * std::numbers::pi)) * mie_series(ka, n_max);
}

double sphere_rcs_exact(const SphereSpec& sphere, double freq_hz, int extra_terms) {
  return std::norm(backscatter_amplitude(sphere, freq_hz, extra_terms));
}

double sphere_rcs_rayleigh(const SphereSpec& sphere, double freq_hz) {
  check_sphere(sphere);
  check_freq(freq_hz);
  const double lambda = wavelength(freq_hz);
  const double ka = wavenumber(freq_hz) * sphere.radius_m;
  return 9.0 * lambda * lambda / (4.0 * std::numbers::pi) * std::pow(ka, 6);
}

double sphere_rcs_optical(const SphereSpec& sphere) {
  check_sphere(sphere);
  return std::numbers::pi * sphere.radius_m * sphere.radius_m;
}

ScatteringRegion classify_region(const SphereSpec& sphere, double freq_hz) {
  check_sphere(sphere);
  check_freq(freq_hz);
  const double ka = wavenumber(freq_hz) * sphere.radius_m;
  if (ka <= 0.5) return ScatteringRegion::kRayleigh;
  if (sphere.radius_m > 2.0 * wavelength(freq_hz)) return ScatteringRegion::kOptical;
  return ScatteringRegion::kMie;
}

}  // namespace rcslab::mie
