// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "rcslab/error.hpp"
#include "rcslab/scatter_sim.hpp"
#include "rcslab/units.hpp"

using namespace rcslab;
using namespace rcslab::sim;

namespace {

TargetModel random_target(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> rcs(0.001, 0.5);
  std::uniform_real_distribution<double> pos(-0.4, 0.4);
  TargetModel t{"random", {}, std::nullopt};
  for (int i = 0; i < n; ++i) t.centers.push_back({rcs(rng), pos(rng), pos(rng)});
  return t;
}

std::vector<oracle::Point> as_points(const TargetModel& t) {
  std::vector<oracle::Point> pts;
  for (const auto& c : t.centers) pts.push_back({c.rcs_m2, c.x_m, c.y_m});
  return pts;
}

SweepConfig small_sweep() { return {24e9, 26e9, 41}; }

}  // namespace

TEST_CASE("coherent_rcs: single center returns its own RCS") {
  const ScanGeometry g;
  const TargetModel t{"one", {{0.37, 0.11, -0.23}}, std::nullopt};
  for (double angle : {0.0, 17.0, 123.4}) {
    CHECK(coherent_rcs(t, 25e9, angle, g) == doctest::Approx(0.37).epsilon(1e-14));
  }
}

TEST_CASE("coherent_rcs: constructive and destructive pairs") {
  const ScanGeometry g;
  const double f = 25e9;
  const TargetModel same{"same", {{1.0, 0.1, 0.0}, {1.0, 0.1, 0.0}}, std::nullopt};
  CHECK(coherent_rcs(same, f, 0.0, g) == doctest::Approx(4.0).epsilon(1e-14));

  // Range difference of lambda / 4 along the line of sight -> phase pi.
  const double quarter = wavelength(f) / 4.0;
  const TargetModel opposed{"opposed", {{1.0, 0.0, 0.0}, {1.0, quarter, 0.0}}, std::nullopt};
  CHECK(coherent_rcs(opposed, f, 0.0, g) < 1e-20);
}

TEST_CASE("coherent_rcs: matches a brute-force complex sum") {
  std::mt19937_64 rng(8);
  const ScanGeometry g;
  const auto t = random_target(rng, 8);
  const auto pts = as_points(t);
  std::uniform_real_distribution<double> ang(0.0, 360.0);
  std::uniform_real_distribution<double> fr(14e9, 26e9);
  for (int i = 0; i < 100; ++i) {
    const double a = ang(rng);
    const double f = fr(rng);
    const double expected = oracle::coherent_rcs(pts, f, a, g.antenna_range_m);
    CHECK(coherent_rcs(t, f, a, g) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("coherent_rcs: coherent bounds, global phase and periodicity") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ang(0.0, 360.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto t = random_target(rng, trial % 2 == 0 ? 2 : 5);
    const double a = ang(rng);
    const double f = 15e9 + 1e8 * trial;
    const ScanGeometry g;
    const double rcs = coherent_rcs(t, f, a, g);
    double amp_sum = 0.0;
    for (const auto& c : t.centers) amp_sum += std::sqrt(c.rcs_m2);
    CHECK(rcs <= amp_sum * amp_sum * (1 + 1e-12));
    if (t.centers.size() == 2) {
      const double d = std::sqrt(t.centers[0].rcs_m2) - std::sqrt(t.centers[1].rcs_m2);
      CHECK(rcs >= d * d * (1 - 1e-9) - 1e-15);
    }
    ScanGeometry shifted = g;
    shifted.antenna_range_m += 0.123456;  // common range offset
    CHECK(coherent_rcs(t, f, a, shifted) == doctest::Approx(rcs).epsilon(1e-10));
    CHECK(coherent_rcs(t, f, a + 360.0, g) == doctest::Approx(rcs).epsilon(1e-12));
  }
}

TEST_CASE("coherent_rcs: errors") {
  const TargetModel empty{"empty", {}, std::nullopt};
  CHECK_THROWS_AS(coherent_rcs(empty, 25e9, 0.0, ScanGeometry{}), DomainError);
  const TargetModel t{"t", {{1.0, 0, 0}}, std::nullopt};
  CHECK_THROWS_AS(coherent_rcs(t, 0.0, 0.0, ScanGeometry{}), DomainError);
  const TargetModel negative{"neg", {{-1.0, 0, 0}}, std::nullopt};
  CHECK_THROWS_AS(negative.validate(), DomainError);
}

TEST_CASE("ScanGeometry: default scan has 180 looks at 2 degree steps") {
  const ScanGeometry g;
  const auto angles = g.angles_deg();
  REQUIRE(angles.size() == 180);
  CHECK(angles.front() == 0.0);
  CHECK(angles.back() == 358.0);
  CHECK(angles[1] - angles[0] == 2.0);
  ScanGeometry bad = g;
  bad.azimuth_step_deg = 0.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = g;
  bad.azimuth_stop_deg = 357.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("synth_sweep: unit center on the axis with no artifacts has unit power") {
  const TargetModel t{"unit", {{1.0, 0.0, 0.0}}, std::nullopt};
  const auto s = synth_sweep(t, 33.0, ScanGeometry{}, small_sweep(), ChamberArtifacts{});
  REQUIRE(s.size() == 41);
  for (const auto& z : s.samples) CHECK(std::norm(z) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("synth_sweep: determinism follows the seed") {
  const TargetModel t{"t", {{0.2, 0.1, 0.05}}, std::nullopt};
  ChamberArtifacts a;
  a.noise_std = 0.01;
  a.seed = 5;
  const auto s1 = synth_sweep(t, 10.0, ScanGeometry{}, small_sweep(), a);
  const auto s2 = synth_sweep(t, 10.0, ScanGeometry{}, small_sweep(), a);
  CHECK(s1.samples == s2.samples);
  a.seed = 6;
  const auto s3 = synth_sweep(t, 10.0, ScanGeometry{}, small_sweep(), a);
  CHECK(s1.samples != s3.samples);
}

TEST_CASE("synth_sweep: noise has the configured complex variance") {
  const TargetModel t{"t", {{0.0, 0.0, 0.0}}, std::nullopt};
  ChamberArtifacts a;
  a.noise_std = 0.2;
  a.seed = 77;
  const auto s = synth_sweep(t, 0.0, ScanGeometry{}, {1e9, 2e9, 20000}, a);
  double p = 0.0;
  for (const auto& z : s.samples) p += std::norm(z);
  CHECK(p / 20000.0 == doctest::Approx(0.04).epsilon(0.03));
}

TEST_CASE("synth_sweep: components superpose linearly") {
  const TargetModel t{"t", {{0.3, 0.12, -0.05}, {0.1, -0.2, 0.1}}, std::nullopt};
  const ScanGeometry g;
  ChamberArtifacts with;
  with.leakage = {0.5, 0.0};
  with.coupling = {0.2, 3e-9};
  with.background = {{0.05, -1.2, 0.3}};
  const auto full = synth_sweep(t, 40.0, g, small_sweep(), with);

  ChamberArtifacts no_leak = with;
  no_leak.leakage = {};
  const auto without = synth_sweep(t, 40.0, g, small_sweep(), no_leak);
  for (std::size_t i = 0; i < full.size(); ++i) {
    // Leakage at zero delay is a constant 0.5 tone.
    CHECK(std::abs(full.samples[i] - without.samples[i] - cplx{0.5, 0.0}) < 1e-14);
  }

  // Target-only plus empty-chamber synthesis reproduces the full capture.
  const auto target_only = synth_sweep(t, 40.0, g, small_sweep(), ChamberArtifacts{});
  const auto empty = synth_background_scan(
      ScanGeometry{g.antenna_range_m, 40.0, 40.0, 1.0}, small_sweep(), with);
  for (std::size_t i = 0; i < full.size(); ++i) {
    CHECK(std::abs(full.samples[i] - (target_only.samples[i] + empty.sweeps[0].samples[i])) < 1e-14);
  }
}

TEST_CASE("synth_sweep: system gain scales the whole noise-free capture") {
  const TargetModel t{"t", {{0.3, 0.12, -0.05}}, std::nullopt};
  ChamberArtifacts a;
  a.leakage = {0.1, 1e-9};
  const auto base = synth_sweep(t, 0.0, ScanGeometry{}, small_sweep(), a);
  a.gain = {0.3, -0.4};
  const auto scaled = synth_sweep(t, 0.0, ScanGeometry{}, small_sweep(), a);
  for (std::size_t i = 0; i < base.size(); ++i) {
    CHECK(std::abs(scaled.samples[i] - cplx{0.3, -0.4} * base.samples[i]) < 1e-15);
  }
}

TEST_CASE("synth_scan: shape, symmetry and consistency with coherent_rcs") {
  const ScanGeometry g;
  const TargetModel axis{"axis", {{0.2, 0.0, 0.0}, {0.1, 0.0, 0.0}}, std::nullopt};
  const auto sym = synth_scan(axis, g, small_sweep(), ChamberArtifacts{});
  REQUIRE(sym.size() == 180);
  for (const auto& s : sym.sweeps) CHECK(s.samples == sym.sweeps.front().samples);

  std::mt19937_64 rng(1);
  const auto t = random_target(rng, 4);
  const auto scan = synth_scan(t, g, small_sweep(), ChamberArtifacts{});
  for (std::size_t a = 0; a < scan.size(); a += 7) {
    for (std::size_t i = 0; i < scan.sweeps[a].size(); i += 5) {
      const double f = scan.sweeps[a].freqs_hz[i];
      CHECK(std::norm(scan.sweeps[a].samples[i]) ==
            doctest::Approx(coherent_rcs(t, f, scan.angles_deg[a], g)).epsilon(1e-12));
    }
  }
}

TEST_CASE("synth_scan: each look's noise depends only on seed and look index") {
  const TargetModel t{"t", {{0.2, 0.1, 0.0}}, std::nullopt};
  ChamberArtifacts a;
  a.noise_std = 0.05;
  a.seed = 11;
  const auto scan = synth_scan(t, ScanGeometry{}, small_sweep(), a);
  const auto look = synth_sweep(t, scan.angles_deg[17], ScanGeometry{}, small_sweep(), a,
                                NoiseStream::kTarget, 17);
  CHECK(look.samples == scan.sweeps[17].samples);
  const auto bg = synth_background_scan(ScanGeometry{}, small_sweep(), a);
  // Independent stream: the background realization differs from the target one.
  const auto empty_target = synth_scan(TargetModel{"z", {{0.0, 0, 0}}, std::nullopt},
                                       ScanGeometry{}, small_sweep(), a);
  CHECK(bg.sweeps[3].samples != empty_target.sweeps[3].samples);
}

TEST_CASE("sphere target: return power equals the Mie RCS") {
  const mie::SphereSpec sphere{0.1524};
  const TargetModel t{"sphere", {}, sphere};
  const ScanGeometry g;
  for (double f : {24e9, 25e9, 26e9}) {
    CHECK(coherent_rcs(t, f, 0.0, g) == doctest::Approx(mie::sphere_rcs_exact(sphere, f)).epsilon(1e-12));
  }
}
