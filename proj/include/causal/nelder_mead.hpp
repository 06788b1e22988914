// Copyright 2026 The causal-capacity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "causal/matrix.hpp"

namespace causal {

struct NelderMeadOptions {
  int max_iters = 2000;
  /// Stop when max_i |f_i - f_best| over the simplex drops below this.
  double tolerance = 1e-9;
  double initial_step = 0.1;
  /// After convergence the simplex is rebuilt around the best vertex this many
  /// times; a collapsed simplex is the usual Nelder-Mead failure mode.
  int rebuilds = 2;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

/// Minimizes f over R^n with adaptive Nelder-Mead coefficients (Gao & Han),
/// which behave better than the textbook ones once n grows past ~5.
template <typename F>
NelderMeadResult nelder_mead_minimize(F&& f, std::vector<double> x0, const NelderMeadOptions& opts = {}) {
  const std::size_t n = x0.size();
  if (n == 0) throw InvalidArgument("nelder_mead_minimize: empty starting point");
  if (opts.max_iters < 1 || !(opts.tolerance > 0.0) || !(opts.initial_step > 0.0)) {
    throw InvalidArgument("nelder_mead_minimize: invalid options");
  }
  const double dn = static_cast<double>(n);
  const double alpha = 1.0;
  const double gamma = 1.0 + 2.0 / dn;
  const double rho = 0.75 - 1.0 / (2.0 * dn);
  const double sigma = 1.0 - 1.0 / dn;

  NelderMeadResult result;
  auto eval = [&](const std::vector<double>& x) {
    ++result.evaluations;
    return f(x);
  };

  std::vector<std::vector<double>> simplex(n + 1, x0);
  std::vector<double> values(n + 1);
  auto build_simplex = [&](const std::vector<double>& base, double step) {
    simplex.assign(n + 1, base);
    for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += step;
    for (std::size_t i = 0; i <= n; ++i) values[i] = eval(simplex[i]);
  };
  build_simplex(x0, opts.initial_step);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  auto point_along = [&](double t, std::vector<double>& out) {
    const auto& worst = simplex[order[n]];
    for (std::size_t i = 0; i < n; ++i) out[i] = centroid[i] + t * (centroid[i] - worst[i]);
  };

  int rebuilds_left = opts.rebuilds;
  double value_at_last_rebuild = 0.0;
  bool have_rebuild_value = false;
  while (result.iterations < opts.max_iters) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const double best = values[order[0]];
    const double spread = values[order[n]] - best;
    if (spread <= opts.tolerance) {
      const bool stalled = have_rebuild_value && value_at_last_rebuild - best <= opts.tolerance;
      if (rebuilds_left == 0 || stalled) {
        result.converged = true;
        break;
      }
      --rebuilds_left;
      value_at_last_rebuild = best;
      have_rebuild_value = true;
      const std::vector<double> anchor = simplex[order[0]];
      build_simplex(anchor, opts.initial_step * 0.1);
      ++result.iterations;
      continue;
    }
    ++result.iterations;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[order[k]][i];
    for (auto& c : centroid) c /= dn;

    point_along(alpha, trial);
    const double f_reflect = eval(trial);
    if (f_reflect < best) {
      point_along(alpha * gamma, trial2);
      const double f_expand = eval(trial2);
      if (f_expand < f_reflect) {
        simplex[order[n]] = trial2;
        values[order[n]] = f_expand;
      } else {
        simplex[order[n]] = trial;
        values[order[n]] = f_reflect;
      }
      continue;
    }
    if (f_reflect < values[order[n - 1]]) {
      simplex[order[n]] = trial;
      values[order[n]] = f_reflect;
      continue;
    }
    // Contraction: outside if the reflection beat the worst vertex, inside otherwise.
    const bool outside = f_reflect < values[order[n]];
    point_along(outside ? alpha * rho : -rho, trial2);
    const double f_contract = eval(trial2);
    if (f_contract < (outside ? f_reflect : values[order[n]])) {
      simplex[order[n]] = trial2;
      values[order[n]] = f_contract;
      continue;
    }
    // Shrink toward the best vertex.
    const auto best_point = simplex[order[0]];
    for (std::size_t k = 1; k <= n; ++k) {
      auto& v = simplex[order[k]];
      for (std::size_t i = 0; i < n; ++i) v[i] = best_point[i] + sigma * (v[i] - best_point[i]);
      values[order[k]] = eval(v);
    }
  }

  const auto best_it = std::min_element(values.begin(), values.end());
  result.value = *best_it;
  result.x = simplex[static_cast<std::size_t>(best_it - values.begin())];
  return result;
}

}  // namespace causal
