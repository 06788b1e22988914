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

// Upper bounds on the quantum capacity Q(N), in qubits per channel use.
//
//   causality           F(R_N), no optimization
//   analytic            closed form of F(R_N) for the shifted depolarizing family
//   holevo_werner       log2 sup_psi ||(I (x) N T)(|psi><psi|)||_1, searched numerically
//   maxrains_surrogate  log2 ||T_B(J_N)||_1, which upper-bounds the max-Rains quantity

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "causal/channel.hpp"
#include "causal/eigen.hpp"
#include "causal/matrix.hpp"
#include "causal/nelder_mead.hpp"
#include "causal/pdm.hpp"
#include "causal/random.hpp"

namespace causal {

enum class BoundMethod { causality, analytic_shifted_depol, holevo_werner, maxrains_surrogate };

inline std::string_view to_string(BoundMethod m) {
  switch (m) {
    case BoundMethod::causality: return "causality";
    case BoundMethod::analytic_shifted_depol: return "analytic_shifted_depol";
    case BoundMethod::holevo_werner: return "holevo_werner";
    case BoundMethod::maxrains_surrogate: return "maxrains_surrogate";
  }
  return "unknown";
}

struct OptimizerConfig {
  int restarts = 32;
  int max_iters = 2000;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;

  void validate() const {
    if (restarts < 1) throw InvalidArgument("OptimizerConfig: restarts must be at least 1");
    if (max_iters < 1) throw InvalidArgument("OptimizerConfig: max_iters must be at least 1");
    if (!(tolerance > 0.0)) throw InvalidArgument("OptimizerConfig: tolerance must be positive");
  }
};

struct BoundReport {
  BoundReport() = default;
  BoundReport(std::string label, BoundMethod m) : channel_label(std::move(label)), method(m) {}

  std::string channel_label;
  BoundMethod method = BoundMethod::causality;
  double value = 0.0;
  std::map<std::string, double> diagnostics;
  /// Best value found by each restart (holevo_werner only).
  std::vector<double> restart_optima;
  std::string note;
  /// Gauge-fixed amplitudes of the best bipartite input, as a column vector
  /// (holevo_werner only).
  std::optional<ComplexMatrix> best_input;
};

inline BoundReport causality_bound(const QuantumChannel& c) {
  BoundReport r{c.label(), BoundMethod::causality};
  const auto pdm = pdm_from_channel(c);
  const double norm = trace_norm(pdm.matrix());
  r.value = causality_F(pdm);
  r.diagnostics["trace_norm"] = norm;
  r.diagnostics["qubits"] = c.qubits_in();
  return r;
}

/// log2(1 - p + s/2 + |2p - s|/2), s = sqrt(1 - 8p + 16p^2 + 4 gamma^2 p^2).
inline double analytic_shifted_depol(double p, double gamma) {
  check_shifted_depolarizing_range(p, gamma);
  const double radicand = 1.0 - 8.0 * p + 16.0 * p * p + 4.0 * gamma * gamma * p * p;
  const double s = std::sqrt(std::max(radicand, 0.0));
  return detail::clamp_log(std::log2(1.0 - p + 0.5 * s + 0.5 * std::abs(2.0 * p - s)));
}

namespace detail {

/// Amplitudes from 2 d^2 reals (re, im interleaved), normalized. Returns an
/// empty vector for a (numerically) zero parameter vector.
inline std::vector<Complex> amplitudes_from_params(const std::vector<double>& x) {
  std::vector<Complex> psi(x.size() / 2);
  double norm = 0.0;
  for (std::size_t k = 0; k < psi.size(); ++k) {
    psi[k] = {x[2 * k], x[2 * k + 1]};
    norm += std::norm(psi[k]);
  }
  if (norm < 1e-24) return {};
  norm = std::sqrt(norm);
  for (auto& a : psi) a /= norm;
  return psi;
}

/// Rotates the largest-magnitude amplitude onto the nonnegative real axis.
inline void fix_global_phase(std::vector<Complex>& psi) {
  std::size_t pivot = 0;
  for (std::size_t k = 1; k < psi.size(); ++k)
    if (std::abs(psi[k]) > std::abs(psi[pivot])) pivot = k;
  if (std::abs(psi[pivot]) == 0.0) return;
  const Complex phase = std::conj(psi[pivot]) / std::abs(psi[pivot]);
  for (auto& a : psi) a *= phase;
}

}  // namespace detail

/// ||(I (x) N o T)(|psi><psi|)||_1 for a normalized bipartite pure state psi on
/// (reference) (x) (channel input), reference dimension equal to d_in.
inline double transpose_channel_norm(const QuantumChannel& c, std::span<const Complex> psi) {
  const std::size_t d = c.dim_in();
  if (psi.size() != d * d) throw InvalidArgument("transpose_channel_norm: state has the wrong dimension");
  const ComplexMatrix rho = ComplexMatrix::outer(psi);
  const ComplexMatrix image = apply_to_second(c, partial_transpose(rho, d, d, 1), d);
  return trace_norm(hermitian_part(image));
}

inline std::vector<Complex> maximally_entangled_amplitudes(std::size_t d) {
  std::vector<Complex> psi(d * d);
  for (std::size_t x = 0; x < d; ++x) psi[x * d + x] = 1.0 / std::sqrt(static_cast<double>(d));
  return psi;
}

/// Holevo-Werner bound by multi-restart Nelder-Mead over pure inputs. Restart 0
/// starts at the maximally entangled state, so the result never falls below
/// the causality bound. The value is the best objective found, i.e. a lower
/// estimate of the true supremum.
inline BoundReport hw_bound(const QuantumChannel& c, const OptimizerConfig& cfg = {}) {
  cfg.validate();
  if (c.qubits_in() != c.qubits_out()) {
    throw InvalidArgument("hw_bound: input and output qubit counts must be equal");
  }
  const std::size_t d = c.dim_in();
  const std::size_t params = 2 * d * d;

  auto objective = [&c](const std::vector<double>& x) {
    const auto psi = detail::amplitudes_from_params(x);
    if (psi.empty()) return 0.0;
    return -transpose_channel_norm(c, psi);
  };

  NelderMeadOptions opts;
  opts.max_iters = cfg.max_iters;
  opts.tolerance = cfg.tolerance;
  opts.initial_step = 0.5 / static_cast<double>(d);

  BoundReport report{c.label(), BoundMethod::holevo_werner};
  double best_norm = -std::numeric_limits<double>::infinity();
  std::vector<double> best_x;
  int total_iterations = 0;
  int converged = 0;
  int best_restart = 0;
  for (int restart = 0; restart < cfg.restarts; ++restart) {
    std::vector<double> x0(params);
    if (restart == 0) {
      const auto phi = maximally_entangled_amplitudes(d);
      for (std::size_t k = 0; k < phi.size(); ++k) x0[2 * k] = phi[k].real();
    } else {
      Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(restart)));
      const auto psi = random_pure_state(d * d, rng);
      for (std::size_t k = 0; k < psi.size(); ++k) {
        x0[2 * k] = psi[k].real();
        x0[2 * k + 1] = psi[k].imag();
      }
    }
    const auto result = nelder_mead_minimize(objective, x0, opts);
    total_iterations += result.iterations;
    converged += result.converged ? 1 : 0;
    report.restart_optima.push_back(-result.value);
    if (-result.value > best_norm) {
      best_norm = -result.value;
      best_x = result.x;
      best_restart = restart;
    }
  }

  auto psi = detail::amplitudes_from_params(best_x);
  detail::fix_global_phase(psi);
  report.best_input = ComplexMatrix(psi.size(), 1, psi);
  report.value = std::log2(best_norm);
  report.diagnostics["restarts"] = cfg.restarts;
  report.diagnostics["iterations"] = total_iterations;
  report.diagnostics["converged_restarts"] = converged;
  report.diagnostics["best_objective"] = best_norm;
  report.diagnostics["best_restart"] = best_restart;
  report.diagnostics["seed"] = static_cast<double>(cfg.seed);
  report.diagnostics["tolerance"] = cfg.tolerance;
  report.diagnostics["lower_estimate"] = 1.0;
  if (converged == 0) report.diagnostics["all_restarts_unconverged"] = 1.0;
  report.note = "best-found value over pure inputs; a lower estimate of the true supremum";
  return report;
}

/// log2 ||T_B(J_N)||_1. Also records log2 ||T_B(J_N)||_inf and the causality
/// bound of the conjugate channel, which must coincide with the value.
inline BoundReport maxrains_surrogate(const QuantumChannel& c) {
  if (c.qubits_in() != c.qubits_out()) {
    throw InvalidArgument("maxrains_surrogate: input and output qubit counts must be equal");
  }
  const std::size_t d = c.dim_in();
  const ComplexMatrix tj = hermitian_part(partial_transpose(c.choi(), d, d, 1));
  BoundReport r{c.label(), BoundMethod::maxrains_surrogate};
  r.value = detail::clamp_log(std::log2(trace_norm(tj)));
  const double conj_causality = causality_F(pdm_from_channel(conjugate(c)));
  r.diagnostics["log2_inf_norm"] = std::log2(inf_norm(tj));
  r.diagnostics["conjugate_causality"] = conj_causality;
  r.diagnostics["identity_residual"] = std::abs(r.value - conj_causality);
  return r;
}

struct BoundComparison {
  std::map<BoundMethod, BoundReport> reports;
  double hw_minus_causality = 0.0;
};

/// Every applicable bound for c. The closed form is included only for channels
/// built by shifted_depolarizing().
inline BoundComparison compare_bounds(const QuantumChannel& c, const OptimizerConfig& cfg = {}) {
  BoundComparison out;
  auto causal_report = causality_bound(c);
  auto hw_report = hw_bound(c, cfg);
  out.hw_minus_causality = hw_report.value - causal_report.value;
  hw_report.diagnostics["minus_causality"] = out.hw_minus_causality;
  out.reports.emplace(BoundMethod::causality, std::move(causal_report));
  out.reports.emplace(BoundMethod::holevo_werner, std::move(hw_report));
  out.reports.emplace(BoundMethod::maxrains_surrogate, maxrains_surrogate(c));
  if (const auto& sp = c.shifted_depolarizing_params()) {
    BoundReport a{c.label(), BoundMethod::analytic_shifted_depol};
    a.value = analytic_shifted_depol(sp->p, sp->gamma);
    a.diagnostics["p"] = sp->p;
    a.diagnostics["gamma"] = sp->gamma;
    out.reports.emplace(BoundMethod::analytic_shifted_depol, std::move(a));
  }
  return out;
}

}  // namespace causal
