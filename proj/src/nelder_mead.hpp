// Copyright 2026 The rcslab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

namespace rcslab::detail {

struct SimplexResult {
  std::vector<double> x;
  double f = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Derivative-free downhill simplex (reflection 1, expansion 2, contraction
/// 1/2, shrink 1/2). Stops when the objective spread over the simplex drops
/// to tol * max(1, |f_best|) or after max_iter iterations.
inline SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                 const std::vector<double>& x0, const std::vector<double>& step,
                                 int max_iter, double tol) {
  const std::size_t n = x0.size();
  std::vector<std::vector<double>> pts(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step[i];
  std::vector<double> val(n + 1);
  for (std::size_t i = 0; i <= n; ++i) val[i] = f(pts[i]);

  std::vector<std::size_t> order(n + 1);
  const auto point_at = [&](const std::vector<double>& centroid, const std::vector<double>& from,
                            double t) {
    std::vector<double> p(n);
    for (std::size_t j = 0; j < n; ++j) p[j] = centroid[j] + t * (from[j] - centroid[j]);
    return p;
  };

  SimplexResult res;
  for (res.iterations = 0; res.iterations < max_iter; ++res.iterations) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return val[a] < val[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[n - 1];

    const double spread = val[worst] - val[best];
    if (std::isfinite(val[worst]) && spread <= tol * std::max(1.0, std::abs(val[best]))) {
      res.converged = true;
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t j = 0; j < n; ++j) centroid[j] += pts[i][j] / static_cast<double>(n);
    }

    const auto reflected = point_at(centroid, pts[worst], -1.0);
    const double f_r = f(reflected);
    if (f_r < val[best]) {
      const auto expanded = point_at(centroid, pts[worst], -2.0);
      const double f_e = f(expanded);
      if (f_e < f_r) {
        pts[worst] = expanded;
        val[worst] = f_e;
      } else {
        pts[worst] = reflected;
        val[worst] = f_r;
      }
      continue;
    }
    if (f_r < val[second]) {
      pts[worst] = reflected;
      val[worst] = f_r;
      continue;
    }
    // Outside contraction when the reflection improved on the worst point.
    const bool outside = f_r < val[worst];
    const auto contracted = point_at(centroid, outside ? reflected : pts[worst], 0.5);
    const double f_c = f(contracted);
    if (f_c < (outside ? f_r : val[worst])) {
      pts[worst] = contracted;
      val[worst] = f_c;
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      pts[i] = point_at(pts[best], pts[i], 0.5);
      val[i] = f(pts[i]);
    }
  }

  const auto best_it = std::min_element(val.begin(), val.end());
  res.x = pts[static_cast<std::size_t>(best_it - val.begin())];
  res.f = *best_it;
  return res;
}

}  // namespace rcslab::detail
