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

// Seeded randomized property suites behind `causal-capacity verify`.
// Every check records the largest violation it saw: for an identity a = b the
// violation is |a - b|, for an inequality a <= b it is a - b. A check passes
// when every violation stays at or below its tolerance.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "causal/bounds.hpp"
#include "causal/channel.hpp"
#include "causal/pdm.hpp"
#include "causal/random.hpp"
#include "causal/verify.hpp"

namespace causal {

struct CheckResult {
  std::string name;
  double tolerance = 0.0;
  int cases = 0;
  int failures = 0;
  double worst = -std::numeric_limits<double>::infinity();

  void record(double violation) {
    ++cases;
    worst = std::max(worst, violation);
    if (!(violation <= tolerance)) ++failures;
  }
  bool passed() const { return cases > 0 && failures == 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
  }
};

namespace detail {

inline CheckResult run_check(const std::string& name, double tol, int cases, std::uint64_t seed,
                             std::uint64_t stream, const std::function<double(Rng&)>& body) {
  CheckResult r{name, tol};
  for (int i = 0; i < cases; ++i) {
    Rng rng(derive_seed(derive_seed(seed, stream), static_cast<std::uint64_t>(i)));
    r.record(body(rng));
  }
  return r;
}

inline QuantumChannel random_qubit_channel(Rng& rng) {
  const int env = 1 + static_cast<int>(rng() % 2);
  return random_channel(1, 1, env, rng());
}

}  // namespace detail

inline SuiteReport run_pdm_suite(std::uint64_t seed, int cases) {
  if (cases < 1) throw InvalidArgument("run_pdm_suite: cases must be at least 1");
  SuiteReport rep{"pdm", {}};
  rep.checks.push_back(detail::run_check("psd_has_zero_causality", 1e-9, cases, seed, 1, [](Rng& rng) {
    const ComplexMatrix first = random_density_matrix(2, rng);
    const ComplexMatrix r = kron(first, random_density_matrix(2, rng));
    return std::abs(causality_F(PseudoDensityMatrix(r, 1, 1)));
  }));
  rep.checks.push_back(detail::run_check("causality_nonnegative", 1e-12, cases, seed, 2, [](Rng& rng) {
    return -causality_F(pdm_from_channel(detail::random_qubit_channel(rng)));
  }));
  rep.checks.push_back(detail::run_check("local_unitary_invariance", 1e-9, cases, seed, 3, [](Rng& rng) {
    const auto r = pdm_from_channel(detail::random_qubit_channel(rng));
    const ComplexMatrix u = random_unitary(2, rng);
    const ComplexMatrix local = kron(u, random_unitary(2, rng));
    const PseudoDensityMatrix rotated(hermitian_part(sandwich(local, r.matrix())), 1, 1);
    return std::abs(causality_F(rotated) - causality_F(r));
  }));
  rep.checks.push_back(detail::run_check("convex_mixture_no_increase", 1e-9, cases, seed, 4, [](Rng& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> w(3);
    double total = 0.0;
    for (auto& x : w) total += (x = u(rng) + 1e-3);
    ComplexMatrix mix(4, 4);
    double max_f = 0.0;
    for (double wi : w) {
      const auto r = pdm_from_channel(detail::random_qubit_channel(rng));
      max_f = std::max(max_f, causality_F(r));
      mix += (wi / total) * r.matrix();
    }
    return causality_F(PseudoDensityMatrix(hermitian_part(mix), 1, 1)) - max_f;
  }));
  rep.checks.push_back(detail::run_check("tensor_additivity", 1e-9, cases, seed, 5, [](Rng& rng) {
    const auto c = detail::random_qubit_channel(rng);
    const auto d = detail::random_qubit_channel(rng);
    const auto rc = pdm_from_channel(c);
    const auto rd = pdm_from_channel(d);
    const auto order = grouped_order(2);
    const std::size_t dims[] = {2, 2, 2, 2};
    const PseudoDensityMatrix product(permute_subsystems(kron(rc.matrix(), rd.matrix()), dims, order), 2, 2);
    return std::abs(causality_F(product) - causality_F(rc) - causality_F(rd));
  }));
  rep.checks.push_back(detail::run_check("tensor_pdm_matches_product", 1e-9, cases, seed, 6, [](Rng& rng) {
    const auto c = detail::random_qubit_channel(rng);
    const auto d = detail::random_qubit_channel(rng);
    const std::size_t dims[] = {2, 2, 2, 2};
    const ComplexMatrix product =
        permute_subsystems(kron(pdm_from_channel(c).matrix(), pdm_from_channel(d).matrix()), dims, grouped_order(2));
    return max_abs_diff(pdm_from_channel(tensor(c, d)).matrix(), product);
  }));
  rep.checks.push_back(detail::run_check("choi_log_negativity_identity", 1e-9, cases, seed, 7, [](Rng& rng) {
    const auto c = detail::random_qubit_channel(rng);
    return std::abs(causality_F(pdm_from_channel(c)) - log_negativity(c.choi(), 2, 2));
  }));
  rep.checks.push_back(detail::run_check("pdm_unit_trace", 1e-9, cases, seed, 8, [](Rng& rng) {
    const auto r = pdm_from_channel(detail::random_qubit_channel(rng));
    return std::abs(r.matrix().trace() - 1.0);
  }));
  return rep;
}

inline SuiteReport run_lemma_suite(std::uint64_t seed, int cases) {
  if (cases < 1) throw InvalidArgument("run_lemma_suite: cases must be at least 1");
  SuiteReport rep{"lemmas", {}};
  rep.checks.push_back(detail::run_check("swap_exchange_residual", 1e-10, cases, seed, 11, [](Rng& rng) {
    std::uniform_int_distribution<int> pick_m(1, 2);
    const int m = pick_m(rng);
    std::uniform_int_distribution<int> pick_k(1, m);
    const int k = pick_k(rng);
    return lemma1_check(random_isometry(qubit_dim(m), qubit_dim(k), rng), k, m);
  }));
  const SuiteSummary l2 = lemma2_suite(derive_seed(seed, 12), cases);
  CheckResult monotone{"encode_decode_monotone", 1e-9, l2.cases, l2.failures, -l2.worst_margin};
  rep.checks.push_back(monotone);
  return rep;
}

inline SuiteReport run_fidelity_suite(std::uint64_t seed, int cases) {
  if (cases < 1) throw InvalidArgument("run_fidelity_suite: cases must be at least 1");
  SuiteReport rep{"fidelity", {}};
  auto random_qubit_state = [](Rng& rng) {
    // Mix pure (rank 1) and full-rank draws.
    const std::size_t rank = 1 + rng() % 2;
    return random_density_matrix(2, rng, rank);
  };
  rep.checks.push_back(detail::run_check("fuchs_van_de_graaf", 1e-9, cases, seed, 21, [&](Rng& rng) {
    const auto a = random_qubit_state(rng);
    const auto rec = fvg_check(a, random_qubit_state(rng));
    return -std::min(rec.lower_gap, rec.upper_gap);
  }));
  rep.checks.push_back(detail::run_check("fidelity_symmetry", 1e-9, cases, seed, 22, [&](Rng& rng) {
    const auto a = random_qubit_state(rng);
    const auto b = random_qubit_state(rng);
    return std::abs(fidelity(a, b) - fidelity(b, a));
  }));
  rep.checks.push_back(detail::run_check("entanglement_fidelity_routes", 1e-9, cases, seed, 23, [](Rng& rng) {
    const auto c = detail::random_qubit_channel(rng);
    const auto rho = random_density_matrix(2, rng);
    return std::abs(entanglement_fidelity(rho, c) - entanglement_fidelity_via_purification(rho, c));
  }));
  rep.checks.push_back(detail::run_check("entanglement_fidelity_kraus_invariance", 1e-9, cases, seed, 24, [](Rng& rng) {
    const auto c = detail::random_qubit_channel(rng);
    const auto other = kraus_from_choi(c.choi(), 1, 1);
    const auto rho = random_density_matrix(2, rng);
    return std::abs(entanglement_fidelity(rho, c) - entanglement_fidelity(rho, other));
  }));
  return rep;
}

inline SuiteReport run_bounds_suite(std::uint64_t seed, int cases) {
  if (cases < 1) throw InvalidArgument("run_bounds_suite: cases must be at least 1");
  SuiteReport rep{"bounds", {}};
  rep.checks.push_back(detail::run_check("maxrains_equals_conjugate_causality", 1e-9, cases, seed, 31, [](Rng& rng) {
    const auto r = maxrains_surrogate(detail::random_qubit_channel(rng));
    return std::abs(r.value - r.diagnostics.at("conjugate_causality"));
  }));
  rep.checks.push_back(detail::run_check("inf_norm_below_trace_norm", 1e-12, cases, seed, 32, [](Rng& rng) {
    const auto r = maxrains_surrogate(detail::random_qubit_channel(rng));
    return r.diagnostics.at("log2_inf_norm") - r.value;
  }));
  rep.checks.push_back(detail::run_check("analytic_matches_causality", 1e-8, cases, seed, 33, [](Rng& rng) {
    std::uniform_real_distribution<double> p(0.0, 0.25), g(0.0, 1.0);
    const double pp = p(rng), gg = g(rng);
    return std::abs(analytic_shifted_depol(pp, gg) - causality_bound(shifted_depolarizing(pp, gg)).value);
  }));
  // The optimizer is the expensive part; a handful of channels is enough.
  rep.checks.push_back(detail::run_check("hw_at_least_causality", 1e-9, std::min(cases, 8), seed, 34, [](Rng& rng) {
    const auto c = detail::random_qubit_channel(rng);
    OptimizerConfig cfg;
    cfg.restarts = 4;
    cfg.seed = rng();
    return causality_bound(c).value - hw_bound(c, cfg).value;
  }));
  return rep;
}

}  // namespace causal
