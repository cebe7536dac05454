// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

#include "rcslab/gating.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "rcslab/error.hpp"
#include "rcslab/simd/kernels.hpp"

namespace rcslab::gating {
namespace {

struct GateResult {
  FrequencySweep sweep;
  double energy_before = 0.0;
  double energy_after = 0.0;
};

GateResult gate_with_energy(const FrequencySweep& sweep, const GateSpec& gate) {
  const TimeProfile profile = to_time_domain(sweep, gate.zero_pad_factor);
  const TimeProfile gated = range_gate(profile, gate.start_s, gate.stop_s, gate.alpha);
  return {to_frequency_domain(gated, sweep.size()), energy(profile), energy(gated)};
}

}  // namespace

TimeProfile to_time_domain(const FrequencySweep& sweep, std::size_t zero_pad_factor,
                           double taper_alpha) {
  sweep.validate();
  if (zero_pad_factor < 1) throw DomainError("zero_pad_factor must be >= 1");

  const std::size_t n = sweep.size();
  const std::size_t m = n * zero_pad_factor;
  std::vector<cplx> input = sweep.samples;
  if (taper_alpha > 0.0) {
    const auto w = tukey_window(n, taper_alpha);
    simd::scale_real(input, w, input);
  }

  TimeProfile p;
  p.samples = detail::dft(input, m, detail::FftDirection::kBackward);
  const double scale = 1.0 / static_cast<double>(m);
  for (auto& s : p.samples) s *= scale;

  p.f_start_hz = sweep.freqs_hz.front();
  p.f_step_hz = sweep.freq_step();
  p.n_freq = n;
  p.zero_pad_factor = zero_pad_factor;
  const double dt = p.time_step();
  p.times_s.resize(m);
  for (std::size_t i = 0; i < m; ++i) p.times_s[i] = dt * static_cast<double>(i);
  return p;
}

FrequencySweep to_frequency_domain(const TimeProfile& profile, std::size_t original_length) {
  if (profile.times_s.size() != profile.samples.size()) {
    throw FormatError("time profile has mismatched time and sample counts");
  }
  if (original_length > profile.size() || original_length < 2) {
    throw FormatError("original length " + std::to_string(original_length) +
                      " is incompatible with a profile of " + std::to_string(profile.size()) +
                      " samples");
  }
  if (original_length != profile.n_freq ||
      profile.n_freq * profile.zero_pad_factor != profile.size()) {
    throw FormatError("original length does not match the profile's sweep metadata");
  }
  auto spectrum = detail::dft(profile.samples, profile.size(), detail::FftDirection::kForward);
  FrequencySweep out;
  out.samples.assign(spectrum.begin(),
                     spectrum.begin() + static_cast<std::ptrdiff_t>(original_length));
  out.freqs_hz.resize(original_length);
  for (std::size_t i = 0; i < original_length; ++i) {
    out.freqs_hz[i] = profile.f_start_hz + profile.f_step_hz * static_cast<double>(i);
  }
  return out;
}

std::vector<double> tukey_window(std::size_t length, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("tukey alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
  if (length == 0) throw DomainError("tukey window length must be >= 1");
  std::vector<double> w(length, 1.0);
  if (length == 1 || alpha == 0.0) return w;

  const double denom = static_cast<double>(length - 1);
  const double pi = std::numbers::pi;
  for (std::size_t i = 0; i < length; ++i) {
    // Evaluate from the nearer end so the window is exactly symmetric.
    const std::size_t k = std::min(i, length - 1 - i);
    const double x = static_cast<double>(k) / denom;
    if (x < alpha / 2.0) w[i] = 0.5 * (1.0 + std::cos(pi * (2.0 * x / alpha - 1.0)));
  }
  return w;
}

TimeProfile range_gate(const TimeProfile& profile, double gate_start_s, double gate_stop_s,
                       double alpha) {
  if (profile.size() == 0) throw FormatError("cannot gate an empty profile");
  const double dt = profile.time_step();
  const double t_max = profile.max_time();
  const double slack = 1e-9 * dt;
  if (!(gate_start_s >= 0.0) || !(gate_stop_s > gate_start_s) || gate_stop_s > t_max + slack) {
    throw DomainError("gate [" + std::to_string(gate_start_s) + ", " +
                      std::to_string(gate_stop_s) + "] s must satisfy 0 <= start < stop <= " +
                      std::to_string(t_max));
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("gate alpha must lie in [0, 1]");

  const auto first = static_cast<std::size_t>(std::ceil(gate_start_s / dt - 1e-9));
  const auto last = std::min(static_cast<std::size_t>(std::floor(gate_stop_s / dt + 1e-9)),
                             profile.size() - 1);
  std::vector<double> weights(profile.size(), 0.0);
  if (first <= last) {
    const auto w = tukey_window(last - first + 1, alpha);
    std::copy(w.begin(), w.end(), weights.begin() + static_cast<std::ptrdiff_t>(first));
  }
  TimeProfile out = profile;
  simd::scale_real(profile.samples, weights, out.samples);
  return out;
}

FrequencySweep background_subtract(const FrequencySweep& sweep, const FrequencySweep& background) {
  sweep.validate();
  background.validate();
  if (!same_grid(sweep, background)) {
    throw FormatError("background sweep uses a different frequency grid");
  }
  FrequencySweep out = sweep;
  simd::sub(sweep.samples, background.samples, out.samples);
  return out;
}

double peak_delay(const TimeProfile& profile, double min_delay_s) {
  std::vector<double> power(profile.size());
  simd::norm(profile.samples, power);
  std::size_t best = profile.size();
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile.times_s[i] < min_delay_s) continue;
    if (best == profile.size() || power[i] > power[best]) best = i;
  }
  if (best == profile.size()) throw DomainError("no profile samples after the minimum delay");
  return profile.times_s[best];
}

double energy(const TimeProfile& profile) { return simd::energy(profile.samples); }
double energy(const FrequencySweep& sweep) { return simd::energy(sweep.samples); }

void GateSpec::validate() const {
  if (!(start_s >= 0.0) || !(stop_s > start_s)) {
    throw DomainError("gate requires 0 <= start < stop");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("gate alpha must lie in [0, 1]");
  if (zero_pad_factor < 1) throw DomainError("zero_pad_factor must be >= 1");
}

FrequencySweep gate_sweep(const FrequencySweep& sweep, const GateSpec& gate) {
  gate.validate();
  return gate_with_energy(sweep, gate).sweep;
}

std::string_view order_name(Order o) {
  return o == Order::kSubtractThenGate ? "subtract-then-gate" : "gate-then-subtract";
}

Order parse_order(std::string_view s) {
  if (s == "subtract-then-gate") return Order::kSubtractThenGate;
  if (s == "gate-then-subtract") return Order::kGateThenSubtract;
  throw DomainError("unknown processing order '" + std::string(s) + "'");
}

GatedScan process_scan(const AzimuthScan& scan, const AzimuthScan* background,
                       const GateSpec& gate, Order order) {
  scan.validate();
  gate.validate();
  if (background != nullptr) {
    background->validate();
    if (background->size() != 1 && background->size() != scan.size()) {
      throw FormatError("background scan must hold one look or one look per angle");
    }
    if (!same_grid(background->sweeps.front(), scan.sweeps.front())) {
      throw FormatError("background scan uses a different frequency grid");
    }
  }
  const auto background_for = [&](std::size_t i) -> const FrequencySweep& {
    return background->size() == 1 ? background->sweeps.front() : background->sweeps[i];
  };

  GatedScan out;
  out.scan.angles_deg = scan.angles_deg;
  out.scan.sweeps.reserve(scan.size());
  double before = 0.0;
  double after = 0.0;
  for (std::size_t i = 0; i < scan.size(); ++i) {
    GateResult r;
    if (background == nullptr) {
      r = gate_with_energy(scan.sweeps[i], gate);
    } else if (order == Order::kSubtractThenGate) {
      r = gate_with_energy(background_subtract(scan.sweeps[i], background_for(i)), gate);
    } else {
      r = gate_with_energy(scan.sweeps[i], gate);
      r.sweep = background_subtract(r.sweep, gate_sweep(background_for(i), gate));
    }
    before += r.energy_before;
    after += r.energy_after;
    out.scan.sweeps.push_back(std::move(r.sweep));
  }
  out.gate_energy_ratio = before > 0.0 ? after / before : 0.0;
  return out;
}

}  // namespace rcslab::gating
