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
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "causal/bounds.hpp"
#include "causal/channel.hpp"
#include "causal/random.hpp"

namespace causal {

struct SweepRow {
  double p = 0.0;
  double gamma = 0.0;
  double causality = 0.0;
  double analytic = 0.0;
  double hw = 0.0;
  double hw_minus_causality = 0.0;
};

/// `steps` evenly spaced points from lo to hi inclusive (a single point is lo).
inline std::vector<double> linspace(double lo, double hi, int steps) {
  if (steps < 1) throw InvalidArgument("linspace: steps must be at least 1");
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    out[static_cast<std::size_t>(k)] = steps == 1 ? lo : lo + (hi - lo) * k / (steps - 1);
  }
  if (steps > 1) out.back() = hi;
  return out;
}

/// Worker count from CAUSAL_CAPACITY_THREADS; 0, unset or unparsable means all
/// available hardware threads.
inline unsigned threads_from_env() {
  unsigned requested = 0;
  if (const char* env = std::getenv("CAUSAL_CAPACITY_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) requested = static_cast<unsigned>(v);
  }
  return requested;
}

inline SweepRow sweep_point(double p, double gamma, const OptimizerConfig& cfg) {
  const QuantumChannel c = shifted_depolarizing(p, gamma);
  SweepRow row;
  row.p = p;
  row.gamma = gamma;
  row.causality = causality_bound(c).value;
  row.analytic = analytic_shifted_depol(p, gamma);
  row.hw = hw_bound(c, cfg).value;
  row.hw_minus_causality = row.hw - row.causality;
  return row;
}

/// Evaluates every (p, gamma) pair, p outer and gamma inner. Grid point k runs
/// with seed derive_seed(cfg.seed, k), so output does not depend on `threads`.
inline std::vector<SweepRow> sweep_shifted_depol(const std::vector<double>& p_grid,
                                                 const std::vector<double>& gamma_grid,
                                                 const OptimizerConfig& cfg, unsigned threads = 0) {
  cfg.validate();
  for (double p : p_grid) check_shifted_depolarizing_range(p, 0.0);
  for (double g : gamma_grid) check_shifted_depolarizing_range(0.0, g);
  const std::size_t total = p_grid.size() * gamma_grid.size();
  std::vector<SweepRow> rows(total);
  if (total == 0) return rows;

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < total; k = next++) {
      try {
        OptimizerConfig point_cfg = cfg;
        point_cfg.seed = derive_seed(cfg.seed, k);
        rows[k] = sweep_point(p_grid[k / gamma_grid.size()], gamma_grid[k % gamma_grid.size()], point_cfg);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

inline constexpr const char* kSweepCsvHeader = "p,gamma,causality,analytic,hw,hw_minus_causality";

/// Locale-independent %.12g.
inline std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s(buf);
  std::replace(s.begin(), s.end(), ',', '.');
  return s;
}

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    out << format_number(r.p) << ',' << format_number(r.gamma) << ',' << format_number(r.causality) << ','
        << format_number(r.analytic) << ',' << format_number(r.hw) << ','
        << format_number(r.hw_minus_causality) << '\n';
  }
}

}  // namespace causal
