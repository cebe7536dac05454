// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

// Maximum-likelihood fits of candidate RCS distributions and AIC ranking.
// All fits work on linear m^2 values.

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rcslab::stats {

/// Positive, finite RCS values in m^2, N >= 2.
class RcsSamples {
 public:
  explicit RcsSamples(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  std::vector<double> values_;
};

struct LogNormal {
  double mu;     ///< mean of ln x
  double sigma;  ///< std of ln x, > 0
};

struct Rayleigh {
  double scale;  ///< b > 0
};

/// Generalized extreme value, CDF exp(-(1 + shape (x - loc) / scale)^(-1/shape)).
struct Gev {
  double shape;
  double loc;
  double scale;  ///< > 0
};

using Model = std::variant<LogNormal, Rayleigh, Gev>;

enum class Family { kLogNormal, kRayleigh, kGev };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);
Family family_of(const Model& m);
int parameter_count(Family f);

// Log-likelihoods; -inf outside the support (GEV) or for invalid parameters.
double loglik(const LogNormal& m, std::span<const double> x);
double loglik(const Rayleigh& m, std::span<const double> x);
double loglik(const Gev& m, std::span<const double> x);
double loglik(const Model& m, std::span<const double> x);

struct FitResult {
  Model model;
  double loglik = 0.0;
  int k = 0;
  double aic = 0.0;

  Family family() const { return family_of(model); }
  std::string_view name() const { return family_name(family()); }
};

/// -2 loglik + 2K.
double aic(double loglik, int k);

/// Closed form: mu = mean(ln x), sigma^2 = mean((ln x - mu)^2).
/// Throws DegenerateFitError when the log-variance is zero.
FitResult fit_lognormal(const RcsSamples& samples);

/// Closed form: b = sqrt(sum x^2 / 2N).
FitResult fit_rayleigh(const RcsSamples& samples);

struct GevFitOptions {
  double initial_shape = 0.1;
  int max_iterations = 1500;  ///< 500 per parameter
  double tolerance = 1e-10;   ///< on the simplex objective spread, relative to max(1, |f|)
};

/// Method-of-moments start at the configured shape, widened until every
/// sample is inside the support.
Gev gev_initial_guess(const RcsSamples& samples, double shape = 0.1);

/// Nelder-Mead on the negative log-likelihood over (shape, loc, ln scale);
/// infeasible points score +inf. Throws InsufficientDataError for N < 10 and
/// FitFailureError when the budget runs out before convergence.
FitResult fit_gev(const RcsSamples& samples, const GevFitOptions& options = {});

FitResult fit(Family family, const RcsSamples& samples);

struct SkippedModel {
  Family family;
  std::string reason;
};

struct ModelRanking {
  std::vector<FitResult> results;  ///< ascending AIC; ties by K, then name
  std::vector<SkippedModel> skipped;

  const FitResult& best() const { return results.front(); }
};

/// Fits every requested family, skipping (and recording) those that fail.
/// Throws NoModelError if none succeeds.
ModelRanking select_model(const RcsSamples& samples,
                          std::span<const Family> families = {});

}  // namespace rcslab::stats
