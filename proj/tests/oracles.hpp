// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

// Independent reference computations used only by the tests. Nothing here
// calls into the library's implementation of the quantity it checks.

#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using lcplx = std::complex<long double>;

/// Riccati-Hankel H_n(x) = x (j_n(x) - i y_n(x)) from the standard library's
/// spherical Bessel functions. The terminating power series cancels badly once
/// n approaches x, so it is not used here.
inline lcplx riccati_hankel2(long double x, int n) {
  const auto un = static_cast<unsigned>(n);
  return x * lcplx(std::sph_bessel(un, x), -std::sph_neumann(un, x));
}

inline lcplx riccati_hankel2_derivative(long double x, int n) {
  return riccati_hankel2(x, n - 1) - (static_cast<long double>(n) / x) * riccati_hankel2(x, n);
}

/// Monostatic PEC sphere RCS from the closed-form Hankel functions, summed in
/// long double to n_max terms.
inline long double sphere_rcs(long double radius, long double freq, int n_max) {
  constexpr long double c = 299792458.0L;
  const long double pi = std::numbers::pi_v<long double>;
  const long double lambda = c / freq;
  const long double x = 2.0L * pi / lambda * radius;
  lcplx s{0.0L, 0.0L};
  for (int n = 1; n <= n_max; ++n) {
    const long double sign = (n % 2 == 0) ? 1.0L : -1.0L;
    s += sign * static_cast<long double>(2 * n + 1) /
         (riccati_hankel2_derivative(x, n) * riccati_hankel2(x, n));
  }
  return lambda * lambda / (4.0L * pi) * std::norm(s);
}

/// Naive O(N M) DFT with zero extension; sign -1 forward, +1 inverse; unnormalized.
inline std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& in,
                                             std::size_t m, int sign) {
  const long double pi = std::numbers::pi_v<long double>;
  std::vector<std::complex<double>> out(m);
  for (std::size_t k = 0; k < m; ++k) {
    lcplx acc{0.0L, 0.0L};
    for (std::size_t n = 0; n < in.size(); ++n) {
      const long double ang = sign * 2.0L * pi * static_cast<long double>((k * n) % m) /
                              static_cast<long double>(m);
      acc += lcplx(in[n].real(), in[n].imag()) * lcplx(std::cos(ang), std::sin(ang));
    }
    out[k] = {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
  }
  return out;
}

/// Tapered cosine window straight from the piecewise definition.
inline std::vector<double> tukey(std::size_t length, double alpha) {
  std::vector<double> w(length);
  const double pi = std::numbers::pi;
  for (std::size_t n = 0; n < length; ++n) {
    if (length == 1) {
      w[n] = 1.0;
      continue;
    }
    const double x = static_cast<double>(n) / static_cast<double>(length - 1);
    if (alpha <= 0.0) {
      w[n] = 1.0;
    } else if (x < alpha / 2.0) {
      w[n] = 0.5 * (1.0 - std::cos(2.0 * pi * x / alpha));
    } else if (x <= 1.0 - alpha / 2.0) {
      w[n] = 1.0;
    } else {
      w[n] = 0.5 * (1.0 - std::cos(2.0 * pi * (1.0 - x) / alpha));
    }
  }
  return w;
}

struct Point {
  double rcs;
  double x;
  double y;
};

/// |sum sqrt(sigma) (cos 2kR - j sin 2kR)|^2 with R = R0 - (x cos p - y sin p).
inline double coherent_rcs(const std::vector<Point>& pts, double freq, double angle_deg,
                           double antenna_range) {
  const long double pi = std::numbers::pi_v<long double>;
  const long double k = 2.0L * pi * freq / 299792458.0L;
  const long double phi = angle_deg * pi / 180.0L;
  long double re = 0.0L;
  long double im = 0.0L;
  for (const auto& p : pts) {
    const long double r = antenna_range - (p.x * std::cos(phi) - p.y * std::sin(phi));
    const long double a = std::sqrt(static_cast<long double>(p.rcs));
    re += a * std::cos(2.0L * k * r);
    im -= a * std::sin(2.0L * k * r);
  }
  return static_cast<double>(re * re + im * im);
}

// Samplers by CDF inversion.
inline double sample_rayleigh(std::mt19937_64& rng, double b) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return b * std::sqrt(-2.0 * std::log1p(-u(rng)));
}

inline double sample_gev(std::mt19937_64& rng, double shape, double loc, double scale) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double p = u(rng);
  while (p <= 0.0) p = u(rng);
  const double y = -std::log(p);
  if (shape == 0.0) return loc - scale * std::log(y);
  return loc + scale * (std::pow(y, -shape) - 1.0) / shape;
}

inline double sample_lognormal(std::mt19937_64& rng, double mu, double s) {
  std::normal_distribution<double> g(mu, s);
  return std::exp(g(rng));
}

/// Golden-section maximization of a unimodal f on [lo, hi].
inline double golden_max(const std::function<double(double)>& f, double lo, double hi,
                         double tol = 1e-12) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - r * (b - a);
  double d = a + r * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol * (1.0 + std::abs(a) + std::abs(b))) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace oracle
