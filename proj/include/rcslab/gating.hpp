// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

// Software range gating and background subtraction.
//
// Transform convention: for a sweep S_k on f_k = f_0 + k df (k < N),
// zero-padded to M = N * pad,
//   x_m = (1/M) sum_k S_k exp(+j 2 pi k m / M),   t_m = m / (M df).
// A return exp(-j 2 pi f tau) therefore peaks at m = tau M df, and
// sum |x_m|^2 = (1/M) sum |S_k|^2.

#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "rcslab/sweep.hpp"

namespace rcslab::gating {

struct TimeProfile {
  std::vector<double> times_s;  ///< t_m = m * dt, dt = 1 / (n_freq * df * zero_pad_factor)
  std::vector<cplx> samples;
  // Originating sweep grid, for the inverse transform.
  double f_start_hz = 0.0;
  double f_step_hz = 0.0;
  std::size_t n_freq = 0;
  std::size_t zero_pad_factor = 1;

  std::size_t size() const noexcept { return samples.size(); }
  double time_step() const { return 1.0 / (static_cast<double>(size()) * f_step_hz); }
  double max_time() const { return times_s.empty() ? 0.0 : times_s.back(); }
};

/// Inverse DFT of the zero-padded sweep. With taper_alpha > 0 the sweep is
/// Tukey-weighted first; that taper is for viewing profiles and is not undone
/// by to_frequency_domain.
TimeProfile to_time_domain(const FrequencySweep& sweep, std::size_t zero_pad_factor = 8,
                           double taper_alpha = 0.0);

/// Forward DFT truncated to the first `original_length` bins.
FrequencySweep to_frequency_domain(const TimeProfile& profile, std::size_t original_length);

/// Symmetric tapered-cosine weights: cosine tapers of total relative width
/// alpha around a flat top. alpha = 0 is rectangular, alpha = 1 is Hann.
std::vector<double> tukey_window(std::size_t length, double alpha);

/// Weights the samples on [gate_start, gate_stop] by a Tukey window spanning
/// exactly those samples and zeroes everything else.
TimeProfile range_gate(const TimeProfile& profile, double gate_start_s, double gate_stop_s,
                       double alpha);

/// sweep - background, pointwise.
FrequencySweep background_subtract(const FrequencySweep& sweep, const FrequencySweep& background);

/// Delay of the strongest sample with t >= min_delay_s.
double peak_delay(const TimeProfile& profile, double min_delay_s = 0.0);

/// sum |x|^2.
double energy(const TimeProfile& profile);
double energy(const FrequencySweep& sweep);

struct GateSpec {
  double start_s = 0.0;
  double stop_s = 0.0;
  double alpha = 0.5;
  std::size_t zero_pad_factor = 8;

  void validate() const;
};

/// Time-domain gate applied to a sweep: to_time_domain, range_gate,
/// to_frequency_domain.
FrequencySweep gate_sweep(const FrequencySweep& sweep, const GateSpec& gate);

enum class Order { kSubtractThenGate, kGateThenSubtract };

std::string_view order_name(Order o);
Order parse_order(std::string_view s);

struct GatedScan {
  AzimuthScan scan;
  /// Time-domain energy inside the gate over energy before gating, summed
  /// over all looks.
  double gate_energy_ratio = 0.0;
};

/// Background subtraction and gating for every look. Both orders agree to
/// rounding since each step is linear; with kGateThenSubtract the background
/// is gated with the same window. `background` may hold a single look, which
/// is then used for every angle, or one look per angle.
GatedScan process_scan(const AzimuthScan& scan, const AzimuthScan* background,
                       const GateSpec& gate, Order order = Order::kSubtractThenGate);

}  // namespace rcslab::gating
