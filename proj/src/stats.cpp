// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

#include "rcslab/stats.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "nelder_mead.hpp"
#include "rcslab/error.hpp"

namespace rcslab::stats {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kGumbelShape = 1e-9;  // |shape| below this uses the shape -> 0 limit

double mean_of(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

FitResult finish(Model model, std::span<const double> x) {
  FitResult r{model, loglik(model, x), parameter_count(family_of(model)), 0.0};
  r.aic = aic(r.loglik, r.k);
  return r;
}

}  // namespace

RcsSamples::RcsSamples(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) throw InsufficientDataError("need at least two RCS samples");
  for (double v : values_) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DomainError("RCS samples must be positive and finite, got " + std::to_string(v));
    }
  }
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kLogNormal: return "lognormal";
    case Family::kRayleigh: return "rayleigh";
    case Family::kGev: return "gev";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::kLogNormal, Family::kRayleigh, Family::kGev}) {
    if (family_name(f) == name) return f;
  }
  throw DomainError("unknown model family '" + std::string(name) + "'");
}

Family family_of(const Model& m) {
  return static_cast<Family>(m.index());
}

int parameter_count(Family f) {
  switch (f) {
    case Family::kLogNormal: return 2;
    case Family::kRayleigh: return 1;
    case Family::kGev: return 3;
  }
  return 0;
}

double loglik(const LogNormal& m, std::span<const double> x) {
  if (!(m.sigma > 0.0)) return -kInf;
  const double norm = -std::log(m.sigma) - 0.5 * std::log(2.0 * std::numbers::pi);
  double ll = 0.0;
  for (double v : x) {
    if (!(v > 0.0)) return -kInf;
    const double z = (std::log(v) - m.mu) / m.sigma;
    ll += norm - std::log(v) - 0.5 * z * z;
  }
  return ll;
}

double loglik(const Rayleigh& m, std::span<const double> x) {
  if (!(m.scale > 0.0)) return -kInf;
  const double b2 = m.scale * m.scale;
  const double log_b2 = std::log(b2);
  double ll = 0.0;
  for (double v : x) {
    if (!(v > 0.0)) return -kInf;
    ll += std::log(v) - log_b2 - v * v / (2.0 * b2);
  }
  return ll;
}

double loglik(const Gev& m, std::span<const double> x) {
  if (!(m.scale > 0.0) || !std::isfinite(m.shape) || !std::isfinite(m.loc)) return -kInf;
  const double log_scale = std::log(m.scale);
  double ll = 0.0;
  if (std::abs(m.shape) < kGumbelShape) {
    for (double v : x) {
      const double z = (v - m.loc) / m.scale;
      ll += -log_scale - z - std::exp(-z);
    }
    return ll;
  }
  const double inv_shape = 1.0 / m.shape;
  for (double v : x) {
    const double t = 1.0 + m.shape * (v - m.loc) / m.scale;
    if (!(t > 0.0)) return -kInf;
    const double log_t = std::log(t);
    ll += -log_scale - (1.0 + inv_shape) * log_t - std::exp(-inv_shape * log_t);
  }
  return ll;
}

double loglik(const Model& m, std::span<const double> x) {
  return std::visit([&](const auto& model) { return loglik(model, x); }, m);
}

double aic(double loglik, int k) {
  if (k < 1) throw DomainError("AIC parameter count must be >= 1");
  return -2.0 * loglik + 2.0 * static_cast<double>(k);
}

FitResult fit_lognormal(const RcsSamples& samples) {
  const auto x = samples.values();
  std::vector<double> logs(x.size());
  std::transform(x.begin(), x.end(), logs.begin(), [](double v) { return std::log(v); });
  const double mu = mean_of(logs);
  double var = 0.0;
  for (double l : logs) var += (l - mu) * (l - mu);
  var /= static_cast<double>(logs.size());
  if (!(var > 0.0)) throw DegenerateFitError("log-normal fit: samples have zero log-variance");
  return finish(LogNormal{mu, std::sqrt(var)}, x);
}

FitResult fit_rayleigh(const RcsSamples& samples) {
  const auto x = samples.values();
  double sum_sq = 0.0;
  for (double v : x) sum_sq += v * v;
  return finish(Rayleigh{std::sqrt(sum_sq / (2.0 * static_cast<double>(x.size())))}, x);
}

Gev gev_initial_guess(const RcsSamples& samples, double shape) {
  const auto x = samples.values();
  const double mean = mean_of(x);
  double var = 0.0;
  for (double v : x) var += (v - mean) * (v - mean);
  var /= static_cast<double>(x.size());
  const double sd = std::sqrt(var);
  const double min_x = *std::min_element(x.begin(), x.end());
  const double max_x = *std::max_element(x.begin(), x.end());

  double scale = 0.0;
  double loc_offset = 0.0;  // loc = mean - scale * loc_offset
  if (std::abs(shape) < kGumbelShape) {
    scale = sd * std::sqrt(6.0) / std::numbers::pi;
    loc_offset = std::numbers::egamma;
  } else {
    // Moments exist for shape < 1/2: mean = loc + scale (g1 - 1) / shape,
    // var = scale^2 (g2 - g1^2) / shape^2 with g_k = Gamma(1 - k shape).
    const double g1 = std::tgamma(1.0 - shape);
    const double g2 = std::tgamma(1.0 - 2.0 * shape);
    scale = sd * std::abs(shape) / std::sqrt(g2 - g1 * g1);
    loc_offset = (g1 - 1.0) / shape;
  }
  if (!(scale > 0.0)) scale = std::max(max_x - min_x, std::abs(mean) * 1e-3) + 1e-300;

  Gev g{shape, mean - scale * loc_offset, scale};
  for (int i = 0; i < 200 && !std::isfinite(loglik(g, x)); ++i) {
    g.scale *= 1.5;
    g.loc = mean - g.scale * loc_offset;
  }
  return g;
}

FitResult fit_gev(const RcsSamples& samples, const GevFitOptions& options) {
  const auto x = samples.values();
  if (x.size() < 10) {
    throw InsufficientDataError("GEV fit needs at least 10 samples, got " +
                                std::to_string(x.size()));
  }
  const Gev start = gev_initial_guess(samples, options.initial_shape);

  const auto objective = [&](const std::vector<double>& p) {
    const double ll = loglik(Gev{p[0], p[1], std::exp(p[2])}, x);
    return std::isfinite(ll) ? -ll : kInf;
  };
  std::vector<double> p{start.shape, start.loc, std::log(start.scale)};
  const std::vector<double> step{0.1, 0.1 * start.scale, 0.1};

  int budget = options.max_iterations;
  bool converged = false;
  double best_f = objective(p);
  // A converged simplex can still sit on a collapsed face; restart from the
  // best vertex until a restart no longer moves the optimum.
  for (int pass = 0; pass < 4 && budget > 0; ++pass) {
    const auto res = detail::nelder_mead(objective, p, step, budget, options.tolerance);
    budget -= res.iterations;
    const double gain = best_f - res.f;
    if (res.f <= best_f) {
      p = res.x;
      best_f = res.f;
    }
    if (!res.converged) break;
    converged = true;
    if (gain <= options.tolerance * std::max(1.0, std::abs(best_f))) break;
  }
  if (!converged) {
    throw FitFailureError("GEV fit did not converge within " +
                              std::to_string(options.max_iterations) + " iterations",
                          {p[0], p[1], std::exp(p[2])}, -best_f);
  }
  return finish(Gev{p[0], p[1], std::exp(p[2])}, x);
}

FitResult fit(Family family, const RcsSamples& samples) {
  switch (family) {
    case Family::kLogNormal: return fit_lognormal(samples);
    case Family::kRayleigh: return fit_rayleigh(samples);
    case Family::kGev: return fit_gev(samples);
  }
  throw DomainError("unknown model family");
}

ModelRanking select_model(const RcsSamples& samples, std::span<const Family> families) {
  static constexpr std::array kAll{Family::kLogNormal, Family::kRayleigh, Family::kGev};
  if (families.empty()) families = kAll;

  ModelRanking ranking;
  for (Family f : families) {
    try {
      ranking.results.push_back(fit(f, samples));
    } catch (const Error& e) {
      ranking.skipped.push_back({f, e.what()});
    }
  }
  if (ranking.results.empty()) throw NoModelError("no candidate model could be fitted");
  std::stable_sort(ranking.results.begin(), ranking.results.end(),
                   [](const FitResult& a, const FitResult& b) {
                     if (a.aic != b.aic) return a.aic < b.aic;
                     if (a.k != b.k) return a.k < b.k;
                     return a.name() < b.name();
                   });
  return ranking;
}

}  // namespace rcslab::stats
