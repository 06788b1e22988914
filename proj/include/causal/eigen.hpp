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

/// Spectral decomposition M = V diag(eigenvalues) V^dagger of a Hermitian matrix.
/// Eigenvalues are ascending; column k of `eigenvectors` belongs to eigenvalue k.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
  int sweeps = 0;

  ComplexMatrix reconstruct() const {
    return matmul(matmul(eigenvectors, ComplexMatrix::diagonal(eigenvalues)), dagger(eigenvectors));
  }
};

namespace detail {

inline double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

inline constexpr double kJacobiOffTol = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

}  // namespace detail

/// Cyclic complex Jacobi eigensolver. Inputs must be Hermitian within
/// kHermitianTol; they are symmetrized before rotating.
inline EigenDecomposition herm_eig(const ComplexMatrix& m) {
  if (!is_hermitian(m)) throw InvalidArgument("herm_eig: matrix is not Hermitian");
  const std::size_t n = m.rows();
  ComplexMatrix a = hermitian_part(m);
  ComplexMatrix v = ComplexMatrix::identity(n);

  // Convergence is judged relative to the matrix scale so that the 1e-12
  // threshold means the same thing for a PDM and for 1e6 * PDM.
  const double scale = std::max(1.0, frobenius_norm(a));
  int sweep = 0;
  for (; sweep < detail::kJacobiMaxSweeps; ++sweep) {
    if (detail::off_diagonal_norm(a) < detail::kJacobiOffTol * scale) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r < 1e-300) continue;
        // Phase a_pq onto the positive real axis, then a real Jacobi rotation.
        const Complex phase = a(p, q) / r;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // U restricted to (p, q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]].
        const Complex upp = c;
        const Complex upq = s;
        const Complex uqp = -s * std::conj(phase);
        const Complex uqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {  // A <- A U
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- U^dagger A
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {  // V <- V U
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n), sweep};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

inline std::vector<double> eigenvalues(const ComplexMatrix& m) { return herm_eig(m).eigenvalues; }

/// Sum of absolute eigenvalues. Hermitian inputs only.
inline double trace_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (double lambda : eigenvalues(m)) s += std::abs(lambda);
  return s;
}

/// Largest absolute eigenvalue. Hermitian inputs only.
inline double inf_norm(const ComplexMatrix& m) {
  const auto ev = eigenvalues(m);
  return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

/// Applies f to the spectrum: V diag(f(lambda)) V^dagger.
template <typename F>
ComplexMatrix spectral_map(const ComplexMatrix& m, F&& f) {
  auto eig = herm_eig(m);
  for (auto& lambda : eig.eigenvalues) lambda = f(lambda);
  return eig.reconstruct();
}

/// Square root of a PSD matrix. Eigenvalues down to -1e-9 are clamped to zero.
inline ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  return spectral_map(m, [](double lambda) {
    if (lambda < -1e-9) throw InvalidArgument("psd_sqrt: matrix has a negative eigenvalue");
    return std::sqrt(std::max(lambda, 0.0));
  });
}

}  // namespace causal
