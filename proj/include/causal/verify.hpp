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

// State fidelity, entanglement fidelity and the Fuchs-van de Graaf chain
//   1 - f(rho, sigma) <= ||rho - sigma||_1 / 2 <= sqrt(1 - f^2),
// plus the randomized check that encoding and decoding never raise F.
//
// The completely-bounded-norm estimate that links entanglement fidelity to the
// diamond distance in the asymptotic argument is not evaluated here.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <random>
#include <vector>

#include "causal/channel.hpp"
#include "causal/eigen.hpp"
#include "causal/matrix.hpp"
#include "causal/pdm.hpp"
#include "causal/random.hpp"

namespace causal {

inline constexpr double kStateTol = 1e-9;

inline void require_state(const ComplexMatrix& rho, const char* what) {
  if (!is_hermitian(rho)) throw InvalidArgument(std::string(what) + ": not Hermitian");
  if (std::abs(rho.trace() - 1.0) > kStateTol) throw InvalidArgument(std::string(what) + ": trace is not 1");
  if (eigenvalues(rho).front() < -kStateTol) throw InvalidArgument(std::string(what) + ": not PSD");
}

/// f(rho, sigma) = Tr sqrt(sqrt(rho) sigma sqrt(rho)) = ||sqrt(rho) sqrt(sigma)||_1,
/// read off the spectrum of the Hermitian dilation [[0, A], [A^dagger, 0]].
inline double fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  require_state(rho, "fidelity(rho)");
  require_state(sigma, "fidelity(sigma)");
  if (rho.rows() != sigma.rows()) throw InvalidArgument("fidelity: dimension mismatch");
  const std::size_t d = rho.rows();
  const ComplexMatrix a = matmul(psd_sqrt(rho), psd_sqrt(sigma));
  ComplexMatrix dilation(2 * d, 2 * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      dilation(i, d + j) = a(i, j);
      dilation(d + j, i) = std::conj(a(i, j));
    }
  return 0.5 * trace_norm(dilation);
}

/// Schumacher's formula: sum_k |Tr(rho A_k)|^2.
inline double entanglement_fidelity(const ComplexMatrix& rho, const QuantumChannel& c) {
  if (!rho.is_square() || rho.rows() != c.dim_in() || c.dim_in() != c.dim_out()) {
    throw InvalidArgument("entanglement_fidelity: dimension mismatch");
  }
  require_state(rho, "entanglement_fidelity");
  double total = 0.0;
  for (const auto& a : c.kraus()) total += std::norm(matmul(rho, a).trace());
  return total;
}

/// Purification sum_i sqrt(lambda_i) |v_i> (x) |i> of rho on (system) (x) (ancilla).
inline std::vector<Complex> purification(const ComplexMatrix& rho) {
  require_state(rho, "purification");
  const auto eig = herm_eig(rho);
  const std::size_t d = rho.rows();
  std::vector<Complex> phi(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    const double w = std::sqrt(std::max(eig.eigenvalues[i], 0.0));
    for (std::size_t s = 0; s < d; ++s) phi[s * d + i] = w * eig.eigenvectors(s, i);
  }
  return phi;
}

/// <phi| (N (x) I)(|phi><phi|) |phi> for a purification phi of rho.
inline double entanglement_fidelity_via_purification(const ComplexMatrix& rho, const QuantumChannel& c) {
  const std::size_t d = rho.rows();
  const auto phi = purification(rho);
  const ComplexMatrix pure = ComplexMatrix::outer(phi);
  // Move the system to the second slot so apply_to_second acts on it.
  const std::size_t dims[] = {d, d};
  const std::size_t swap_order[] = {1, 0};
  const ComplexMatrix out = apply_to_second(c, permute_subsystems(pure, dims, swap_order), d);
  const ComplexMatrix back = permute_subsystems(out, dims, swap_order);
  Complex overlap = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i)
    for (std::size_t j = 0; j < phi.size(); ++j) overlap += std::conj(phi[i]) * back(i, j) * phi[j];
  return overlap.real();
}

struct FidelityCheckRecord {
  double f = 0.0;
  double half_trace_dist = 0.0;
  double lower_gap = 0.0;  ///< half_trace_dist - (1 - f)
  double upper_gap = 0.0;  ///< sqrt(1 - f^2) - half_trace_dist

  bool holds(double tol = 1e-9) const { return lower_gap >= -tol && upper_gap >= -tol; }
};

inline FidelityCheckRecord fvg_check(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  FidelityCheckRecord rec;
  rec.f = fidelity(rho, sigma);
  rec.half_trace_dist = 0.5 * trace_norm(rho - sigma);
  const double f = std::min(rec.f, 1.0);
  rec.lower_gap = rec.half_trace_dist - (1.0 - f);
  rec.upper_gap = std::sqrt(std::max(0.0, 1.0 - f * f)) - rec.half_trace_dist;
  return rec;
}

struct SuiteSummary {
  int cases = 0;
  int failures = 0;
  /// Smallest F(R_N) - F(R_{D o N o E}) seen; below -tol means a violation.
  double worst_margin = 0.0;

  bool passed() const { return failures == 0; }
};

/// Single monotonicity case: F(R_{D o N o E}) <= F(R_N) + tol. Returns the margin.
inline double encode_decode_margin(const QuantumChannel& encoder, const QuantumChannel& channel,
                                   const QuantumChannel& decoder) {
  const QuantumChannel m = compose(decoder, compose(channel, encoder));
  return causality_F(pdm_from_channel(channel)) - causality_F(pdm_from_channel(m));
}

/// Random (E, N, D) triples: E an isometric encoding k -> m qubits, N a random
/// m-qubit channel (sometimes a tensor of two single-qubit channels), D a random
/// decoding m -> k, with 1 <= k <= m <= 2.
inline SuiteSummary lemma2_suite(std::uint64_t seed, int cases, double tol = 1e-9) {
  if (cases < 1) throw InvalidArgument("lemma2_suite: cases must be at least 1");
  SuiteSummary summary;
  summary.worst_margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < cases; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    std::uniform_int_distribution<int> pick_m(1, 2);
    const int m = pick_m(rng);
    std::uniform_int_distribution<int> pick_k(1, m);
    const int k = pick_k(rng);
    const std::uint64_t s1 = rng(), s2 = rng(), s3 = rng();
    const bool product = m == 2 && (rng() & 1U) != 0;
    const QuantumChannel channel = product ? tensor(random_channel(1, 1, 1, s1), random_channel(1, 1, 2, s2))
                                           : random_channel(m, m, 1 + static_cast<int>(s2 % 2), s1);
    const QuantumChannel encoder =
        isometry_channel(random_isometry(qubit_dim(m), qubit_dim(k), rng), k, m, "encoder");
    const QuantumChannel decoder = random_channel(m, k, 1 + static_cast<int>(s3 % 2), s3);
    const double margin = encode_decode_margin(encoder, channel, decoder);
    ++summary.cases;
    if (margin < -tol) ++summary.failures;
    summary.worst_margin = std::min(summary.worst_margin, margin);
  }
  return summary;
}

}  // namespace causal
