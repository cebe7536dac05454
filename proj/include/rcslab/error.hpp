// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rcslab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed or mutually inconsistent data (grids, lengths, file contents).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A calibration reference with a zero-power sample.
class DegenerateReferenceError : public Error {
 public:
  using Error::Error;
};

/// A fit whose likelihood has no unique maximizer (e.g. zero log-variance).
class DegenerateFitError : public Error {
 public:
  using Error::Error;
};

class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// The optimizer hit its iteration budget. Carries the best iterate seen.
class FitFailureError : public Error {
 public:
  FitFailureError(const std::string& what, std::vector<double> best_params,
                  double best_loglik)
      : Error(what), best_params_(std::move(best_params)), best_loglik_(best_loglik) {}

  const std::vector<double>& best_params() const noexcept { return best_params_; }
  double best_loglik() const noexcept { return best_loglik_; }

 private:
  std::vector<double> best_params_;
  double best_loglik_;
};

/// Every candidate model failed to fit.
class NoModelError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace rcslab
