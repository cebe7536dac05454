// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "rcslab/error.hpp"
#include "rcslab/gating.hpp"
#include "rcslab/scatter_sim.hpp"
#include "rcslab/units.hpp"

using namespace rcslab;
using namespace rcslab::gating;

namespace {

FrequencySweep random_sweep(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  auto s = FrequencySweep::zeros(24e9, 26e9, n);
  for (auto& z : s.samples) z = {g(rng), g(rng)};
  return s;
}

// exp(-j 2 pi f tau) on the sweep grid.
FrequencySweep delay_tone(const FrequencySweep& grid, double tau, double amplitude = 1.0) {
  FrequencySweep s = grid;
  for (std::size_t i = 0; i < s.size(); ++i) {
    s.samples[i] = std::polar(amplitude, -2.0 * std::numbers::pi * s.freqs_hz[i] * tau);
  }
  return s;
}

double max_rel_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num = std::max(num, std::abs(a[i] - b[i]));
    den = std::max(den, std::abs(b[i]));
  }
  return num / den;
}

std::size_t argmax_power(const TimeProfile& p) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (std::norm(p.samples[i]) > std::norm(p.samples[best])) best = i;
  }
  return best;
}

}  // namespace

TEST_CASE("to_time_domain: constant sweep is an impulse at t = 0") {
  auto s = FrequencySweep::zeros(1e9, 2e9, 64);
  std::fill(s.samples.begin(), s.samples.end(), cplx{1.0, 0.0});
  const auto p = to_time_domain(s, 1);
  REQUIRE(p.size() == 64);
  CHECK(std::abs(p.samples[0] - cplx{1.0, 0.0}) < 1e-14);
  for (std::size_t i = 1; i < p.size(); ++i) CHECK(std::abs(p.samples[i]) < 1e-14);
  CHECK(p.times_s[0] == 0.0);
}

TEST_CASE("to_time_domain: a bin-centred delay peaks at tau / dt") {
  const auto grid = FrequencySweep::zeros(24e9, 26e9, 401);
  const double df = grid.freq_step();
  for (std::size_t pad : {1u, 4u, 8u}) {
    const double dt = 1.0 / (401.0 * df * static_cast<double>(pad));
    const std::size_t bin = 195 * pad;
    const auto p = to_time_domain(delay_tone(grid, static_cast<double>(bin) * dt), pad);
    CHECK(p.time_step() == doctest::Approx(dt).epsilon(1e-12));
    CHECK(argmax_power(p) == bin);
    CHECK(peak_delay(p) == doctest::Approx(static_cast<double>(bin) * dt).epsilon(1e-12));
  }
}

TEST_CASE("to_time_domain matches a direct DFT") {
  const auto s = random_sweep(37, 4);
  const auto p = to_time_domain(s, 3);
  auto expected = oracle::dft(s.samples, 111, +1);
  for (auto& z : expected) z /= 111.0;
  CHECK(max_rel_diff(p.samples, expected) < 1e-12);
}

TEST_CASE("frequency/time round trip and Parseval") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto s = random_sweep(401, seed);
    for (std::size_t pad : {1u, 8u}) {
      const auto p = to_time_domain(s, pad);
      const auto back = to_frequency_domain(p, s.size());
      CHECK(max_rel_diff(back.samples, s.samples) < 1e-12);
      CHECK(back.freqs_hz == s.freqs_hz);
      const double m = static_cast<double>(p.size());
      CHECK(energy(p) == doctest::Approx(energy(s) / m).epsilon(1e-10));
    }
  }
}

TEST_CASE("to_time_domain / to_frequency_domain errors") {
  auto s = random_sweep(16, 1);
  s.freqs_hz[5] += 1e6;
  CHECK_THROWS_AS(to_time_domain(s), FormatError);
  const auto p = to_time_domain(random_sweep(16, 1), 2);
  CHECK_THROWS_AS(to_frequency_domain(p, 15), FormatError);
  CHECK_THROWS_AS(to_frequency_domain(p, 33), FormatError);
  CHECK_THROWS_AS(to_time_domain(random_sweep(16, 1), 0), DomainError);

  TimeProfile zero = p;
  std::fill(zero.samples.begin(), zero.samples.end(), cplx{});
  for (const auto& z : to_frequency_domain(zero, 16).samples) CHECK(z == cplx{});
}

TEST_CASE("tukey_window") {
  SUBCASE("alpha = 0 is rectangular") {
    for (double w : tukey_window(9, 0.0)) CHECK(w == 1.0);
  }
  SUBCASE("alpha = 1 is Hann") {
    const auto w = tukey_window(11, 1.0);
    CHECK(w.front() == 0.0);
    CHECK(w.back() == 0.0);
    for (std::size_t n = 0; n < w.size(); ++n) {
      CHECK(w[n] == w[w.size() - 1 - n]);
      const double hann = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * n / 10.0));
      CHECK(w[n] == doctest::Approx(hann).epsilon(1e-14));
    }
  }
  SUBCASE("alpha = 0.5, length 8 against the piecewise definition") {
    const auto w = tukey_window(8, 0.5);
    const auto ref = oracle::tukey(8, 0.5);
    for (std::size_t n = 0; n < 8; ++n) {
      CHECK(w[n] == doctest::Approx(ref[n]).epsilon(1e-14));
      CHECK(w[n] == w[7 - n]);
    }
    CHECK(*std::max_element(w.begin(), w.end()) == 1.0);
    for (std::size_t n = 1; n < 4; ++n) CHECK(w[n] >= w[n - 1]);
  }
  SUBCASE("random lengths and alphas against the definition") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> len(1, 300);
    std::uniform_real_distribution<double> al(0.0, 1.0);
    for (int t = 0; t < 200; ++t) {
      const std::size_t l = len(rng);
      const double a = al(rng);
      const auto w = tukey_window(l, a);
      const auto ref = oracle::tukey(l, a);
      for (std::size_t n = 0; n < l; ++n) CHECK(w[n] == doctest::Approx(ref[n]).epsilon(1e-12));
    }
  }
  CHECK(tukey_window(1, 0.7) == std::vector<double>{1.0});
  CHECK_THROWS_AS(tukey_window(8, -0.1), DomainError);
  CHECK_THROWS_AS(tukey_window(8, 1.1), DomainError);
  CHECK_THROWS_AS(tukey_window(0, 0.5), DomainError);
}

TEST_CASE("range_gate") {
  const auto s = random_sweep(101, 9);
  const auto p = to_time_domain(s, 2);

  SUBCASE("full-span rectangular gate is the identity") {
    const auto g = range_gate(p, 0.0, p.max_time(), 0.0);
    CHECK(g.samples == p.samples);
  }
  SUBCASE("rectangular gate is idempotent") {
    const double t0 = p.times_s[20] * 0.999 + p.times_s[21] * 0.001;
    const double t1 = p.times_s[90];
    const auto once = range_gate(p, t0, t1, 0.0);
    const auto twice = range_gate(once, t0, t1, 0.0);
    CHECK(twice.samples == once.samples);
    CHECK(once.samples[20] == cplx{});
    CHECK(once.samples[21] == p.samples[21]);
    CHECK(once.samples[90] == p.samples[90]);
    CHECK(once.samples[91] == cplx{});
  }
  SUBCASE("gate between two samples selects nothing") {
    const double dt = p.time_step();
    const auto g = range_gate(p, 10.2 * dt, 10.8 * dt, 0.3);
    for (const auto& z : g.samples) CHECK(z == cplx{});
  }
  SUBCASE("invalid gates") {
    CHECK_THROWS_AS(range_gate(p, 5e-9, 4e-9, 0.5), DomainError);
    CHECK_THROWS_AS(range_gate(p, -1e-9, 4e-9, 0.5), DomainError);
    CHECK_THROWS_AS(range_gate(p, 0.0, 2.0 * p.max_time(), 0.5), DomainError);
    CHECK_THROWS_AS(range_gate(p, 0.0, p.max_time(), 1.5), DomainError);
  }
}

TEST_CASE("range_gate: a tone outside the gate is rejected") {
  const auto grid = FrequencySweep::zeros(24e9, 26e9, 401);
  const double dt = 1.0 / (401.0 * grid.freq_step());
  const double tau_keep = 60 * dt;
  const double tau_drop = 250 * dt;
  auto two = delay_tone(grid, tau_keep);
  const auto drop = delay_tone(grid, tau_drop, 0.8);
  for (std::size_t i = 0; i < two.size(); ++i) two.samples[i] += drop.samples[i];
  const auto one = delay_tone(grid, tau_keep);

  const auto p_two = to_time_domain(two, 1);
  const auto g_two = range_gate(p_two, 40 * dt, 80 * dt, 0.5);
  const auto g_one = range_gate(to_time_domain(one, 1), 40 * dt, 80 * dt, 0.5);
  const double before = std::norm(p_two.samples[250]);
  const double after = std::norm(g_two.samples[250]);
  CHECK(after <= before * 1e-6);
  // Frequency-domain result matches the tone-free synthesis.
  const auto f_two = to_frequency_domain(g_two, 401);
  const auto f_one = to_frequency_domain(g_one, 401);
  double resid = 0.0;
  for (std::size_t i = 0; i < 401; ++i) resid += std::norm(f_two.samples[i] - f_one.samples[i]);
  CHECK(resid <= 1e-6 * energy(drop));
}

TEST_CASE("background_subtract") {
  const auto a = random_sweep(50, 1);
  const auto b = random_sweep(50, 2);
  const auto c = random_sweep(50, 3);
  for (const auto& z : background_subtract(a, a).samples) CHECK(z == cplx{});
  auto zero = a;
  std::fill(zero.samples.begin(), zero.samples.end(), cplx{});
  CHECK(background_subtract(a, zero).samples == a.samples);

  auto ab = a;
  for (std::size_t i = 0; i < ab.size(); ++i) ab.samples[i] += b.samples[i];
  const auto lhs = background_subtract(ab, c);
  const auto rhs = background_subtract(a, c);
  for (std::size_t i = 0; i < 50; ++i) CHECK(std::abs(lhs.samples[i] - (rhs.samples[i] + b.samples[i])) < 1e-14);

  const auto other = FrequencySweep::zeros(24e9, 26.1e9, 50);
  CHECK_THROWS_AS(background_subtract(a, other), FormatError);
}

TEST_CASE("background_subtract against the simulator's linearity") {
  using namespace rcslab::sim;
  const TargetModel t{"t", {{0.05, 0.15, 0.0}, {0.03, -0.1, 0.12}}, std::nullopt};
  const ScanGeometry g{1.8288, 0.0, 20.0, 2.0};
  const SweepConfig sw{24e9, 26e9, 101};
  ChamberArtifacts chamber;
  chamber.leakage = {0.5, 1e-9};
  chamber.coupling = {0.2, 3e-9};
  chamber.background = {{0.01, -1.5, 0.0}};

  const auto scan = synth_scan(t, g, sw, chamber);
  SUBCASE("clutter-only background leaves target, leakage and coupling") {
    ChamberArtifacts clutter_only;
    clutter_only.background = chamber.background;
    ChamberArtifacts leak_coupling;
    leak_coupling.leakage = chamber.leakage;
    leak_coupling.coupling = chamber.coupling;
    const auto bg = synth_background_scan(g, sw, clutter_only);
    const auto expected = synth_scan(t, g, sw, leak_coupling);
    for (std::size_t a = 0; a < scan.size(); ++a) {
      const auto r = background_subtract(scan.sweeps[a], bg.sweeps[a]);
      CHECK(max_rel_diff(r.samples, expected.sweeps[a].samples) < 1e-12);
    }
  }
  SUBCASE("empty-chamber background leaves the target alone") {
    const auto bg = synth_background_scan(g, sw, chamber);
    const auto expected = synth_scan(t, g, sw, ChamberArtifacts{});
    for (std::size_t a = 0; a < scan.size(); ++a) {
      const auto r = background_subtract(scan.sweeps[a], bg.sweeps[a]);
      CHECK(max_rel_diff(r.samples, expected.sweeps[a].samples) < 1e-12);
    }
  }
}

TEST_CASE("process_scan: all-pass gate on a clean scan is the identity") {
  using namespace rcslab::sim;
  const TargetModel t{"t", {{0.05, 0.15, 0.0}, {0.03, -0.1, 0.12}}, std::nullopt};
  const ScanGeometry g{1.8288, 0.0, 10.0, 2.0};
  const auto scan = synth_scan(t, g, {24e9, 26e9, 401}, ChamberArtifacts{});
  const auto profile = to_time_domain(scan.sweeps.front(), 8);
  const GateSpec all_pass{0.0, profile.max_time(), 0.0, 8};
  const auto out = process_scan(scan, nullptr, all_pass);
  CHECK(out.gate_energy_ratio == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t a = 0; a < scan.size(); ++a) {
    CHECK(max_rel_diff(out.scan.sweeps[a].samples, scan.sweeps[a].samples) < 1e-10);
  }
}

TEST_CASE("process_scan: both processing orders agree") {
  using namespace rcslab::sim;
  const TargetModel t{"t", {{0.05, 0.15, 0.0}, {0.03, -0.1, 0.12}}, std::nullopt};
  const ScanGeometry g{1.8288, 0.0, 10.0, 2.0};
  const SweepConfig sw{24e9, 26e9, 401};
  ChamberArtifacts chamber;
  chamber.leakage = {0.5, 1e-9};
  chamber.background = {{0.01, -1.5, 0.0}};
  chamber.noise_std = 0.01;
  chamber.seed = 3;
  const auto scan = synth_scan(t, g, sw, chamber);
  const auto bg = synth_background_scan(g, sw, chamber);
  const GateSpec gate{9e-9, 15.5e-9, 0.5, 8};
  const auto a = process_scan(scan, &bg, gate, Order::kSubtractThenGate);
  const auto b = process_scan(scan, &bg, gate, Order::kGateThenSubtract);
  for (std::size_t i = 0; i < scan.size(); ++i) {
    CHECK(max_rel_diff(b.scan.sweeps[i].samples, a.scan.sweeps[i].samples) < 1e-12);
  }
  CHECK(parse_order(order_name(Order::kGateThenSubtract)) == Order::kGateThenSubtract);
  CHECK_THROWS_AS(parse_order("sideways"), DomainError);

  AzimuthScan two_looks = bg;
  two_looks.angles_deg.resize(2);
  two_looks.sweeps.resize(2);
  CHECK_THROWS_AS(process_scan(scan, &two_looks, gate), FormatError);
}

TEST_CASE("sphere return peaks at the illuminated surface") {
  using namespace rcslab::sim;
  const mie::SphereSpec sphere{0.1524};
  const TargetModel t{"sphere", {}, sphere};
  const ScanGeometry g{1.8288, 0.0, 0.0, 1.0};
  const auto s = synth_sweep(t, 0.0, g, {24e9, 26e9, 401}, ChamberArtifacts{});
  const auto p = to_time_domain(s, 8);
  const double expected = range_to_delay(g.antenna_range_m - sphere.radius_m);
  CHECK(std::abs(peak_delay(p) - expected) <= 1.5 * p.time_step());
}

TEST_CASE("range and delay conversions are inverse") {
  CHECK(range_to_delay(1.8288) == doctest::Approx(2 * 1.8288 / kSpeedOfLight));
  CHECK(delay_to_range(range_to_delay(3.7)) == doctest::Approx(3.7).epsilon(1e-15));
}
