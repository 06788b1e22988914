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

#include <cstdint>
#include <random>
#include <vector>

#include "causal/matrix.hpp"

namespace causal {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer; used to derive independent substreams from
/// (seed, index) pairs so parallel work is order independent.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline Complex random_gaussian_complex(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

inline ComplexMatrix random_gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix m(rows, cols);
  for (auto& x : m.entries()) x = random_gaussian_complex(rng);
  return m;
}

/// Orthonormalizes the columns of m in place (modified Gram-Schmidt).
/// Requires rows >= cols and full column rank.
inline ComplexMatrix orthonormalize_columns(ComplexMatrix m) {
  if (m.rows() < m.cols()) throw InvalidArgument("orthonormalize_columns: more columns than rows");
  for (std::size_t k = 0; k < m.cols(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      Complex overlap = 0.0;
      for (std::size_t i = 0; i < m.rows(); ++i) overlap += std::conj(m(i, j)) * m(i, k);
      for (std::size_t i = 0; i < m.rows(); ++i) m(i, k) -= overlap * m(i, j);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) norm += std::norm(m(i, k));
    norm = std::sqrt(norm);
    if (norm < 1e-12) throw InvalidArgument("orthonormalize_columns: rank deficient input");
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, k) /= norm;
  }
  return m;
}

/// Isometry C^cols -> C^rows with orthonormal columns.
inline ComplexMatrix random_isometry(std::size_t rows, std::size_t cols, Rng& rng) {
  return orthonormalize_columns(random_gaussian_matrix(rows, cols, rng));
}

inline ComplexMatrix random_unitary(std::size_t n, Rng& rng) { return random_isometry(n, n, rng); }

inline ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  return hermitian_part(random_gaussian_matrix(n, n, rng));
}

/// Normalized random pure state amplitudes.
inline std::vector<Complex> random_pure_state(std::size_t dim, Rng& rng) {
  std::vector<Complex> v(dim);
  double norm = 0.0;
  for (auto& x : v) {
    x = random_gaussian_complex(rng);
    norm += std::norm(x);
  }
  norm = std::sqrt(norm);
  for (auto& x : v) x /= norm;
  return v;
}

/// Random mixed state G G^dagger / Tr(G G^dagger) with G of shape dim x rank.
inline ComplexMatrix random_density_matrix(std::size_t dim, Rng& rng, std::size_t rank = 0) {
  if (rank == 0) rank = dim;
  const auto g = random_gaussian_matrix(dim, rank, rng);
  ComplexMatrix rho = matmul(g, dagger(g));
  rho *= 1.0 / rho.trace().real();
  return hermitian_part(rho);
}

}  // namespace causal
