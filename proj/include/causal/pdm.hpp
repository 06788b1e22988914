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

// Pseudo-density matrices of two-time processes and the causality measure
// F(R) = log2 ||R||_1.
//
// Register convention: every PDM lives on (earlier register) (x) (later
// register). For SWAP^{(x)l}, qubit i of the earlier register is paired with
// qubit l + i, i.e. the earlier block comes first as a whole. The same
// ordering is used for Choi matrices, so R_N and J_N share index layout.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "causal/channel.hpp"
#include "causal/eigen.hpp"
#include "causal/matrix.hpp"

namespace causal {

/// Hermitian, unit-trace operator over the earlier and later registers.
/// Negative eigenvalues are allowed; they witness temporal correlation.
class PseudoDensityMatrix {
 public:
  PseudoDensityMatrix(ComplexMatrix matrix, int qubits_in, int qubits_out)
      : matrix_(std::move(matrix)), qubits_in_(qubits_in), qubits_out_(qubits_out) {
    if (!matrix_.is_square() || matrix_.rows() != qubit_dim(qubits_in) * qubit_dim(qubits_out)) {
      throw InvalidArgument("PseudoDensityMatrix: matrix size does not match the registers");
    }
    if (!is_hermitian(matrix_)) throw InvalidArgument("PseudoDensityMatrix: matrix is not Hermitian");
    if (std::abs(matrix_.trace() - 1.0) > 1e-9) throw InvalidArgument("PseudoDensityMatrix: trace is not 1");
  }

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  int qubits_in() const noexcept { return qubits_in_; }
  int qubits_out() const noexcept { return qubits_out_; }

 private:
  ComplexMatrix matrix_;
  int qubits_in_;
  int qubits_out_;
};

/// sum_{x,y} |x><y| (x) |y><x| over l-qubit basis strings.
inline ComplexMatrix swap_permutation_form(int l) {
  const std::size_t d = qubit_dim(l);
  ComplexMatrix out(d * d, d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) out(x * d + y, y * d + x) = 1.0;
  return out;
}

/// SWAP^{(x)l} built from (1/2^l) sum over Pauli strings P of P (x) P, checked
/// against the permutation form.
inline ComplexMatrix swap_matrix(int l) {
  if (l < 1 || l > 3) throw InvalidArgument("swap_matrix: l must be 1, 2 or 3");
  const std::size_t d = qubit_dim(l);
  ComplexMatrix out(d * d, d * d);
  const std::size_t strings = std::size_t{1} << (2 * l);
  for (std::size_t code = 0; code < strings; ++code) {
    ComplexMatrix p = pauli(static_cast<int>(code & 3));
    for (int q = 1; q < l; ++q) p = kron(p, pauli(static_cast<int>((code >> (2 * q)) & 3)));
    out += kron(p, p);
  }
  out *= 1.0 / static_cast<double>(d);
  if (max_abs_diff(out, swap_permutation_form(l)) > 1e-12) {
    throw std::logic_error("swap_matrix: Pauli-sum and permutation forms disagree");
  }
  return out;
}

/// Sorting permutation that takes (A1 B1 A2 B2 ... ) to (A1 A2 ... B1 B2 ...),
/// for use with permute_subsystems when tensoring PDMs.
inline std::vector<std::size_t> grouped_order(std::size_t pairs) {
  std::vector<std::size_t> perm;
  for (std::size_t k = 0; k < pairs; ++k) perm.push_back(2 * k);
  for (std::size_t k = 0; k < pairs; ++k) perm.push_back(2 * k + 1);
  return perm;
}

/// PDM of a single qubit prepared in rho, measured, sent through c and
/// measured again: (I (x) N)({rho (x) I/2, SWAP}).
inline PseudoDensityMatrix pdm_two_point(const ComplexMatrix& rho, const QuantumChannel& c) {
  if (c.qubits_in() != 1 || c.qubits_out() != 1) {
    throw InvalidArgument("pdm_two_point: channel must act on a single qubit");
  }
  if (rho.rows() != 2 || rho.cols() != 2 || !is_hermitian(rho) || std::abs(rho.trace() - 1.0) > 1e-9 ||
      eigenvalues(rho).front() < -1e-9) {
    throw InvalidArgument("pdm_two_point: rho is not a single-qubit density matrix");
  }
  ComplexMatrix half_identity = ComplexMatrix::identity(2);
  half_identity *= 0.5;
  const ComplexMatrix r = anticommutator(kron(rho, half_identity), swap_matrix(1));
  return PseudoDensityMatrix(hermitian_part(apply_to_second(c, r, 2)), 1, 1);
}

/// R_N = (I (x) N)(SWAP^{(x)l} / 2^l) for an l-qubit channel.
inline PseudoDensityMatrix pdm_from_channel(const QuantumChannel& c) {
  if (c.qubits_in() != c.qubits_out()) {
    throw InvalidArgument("pdm_from_channel: input and output qubit counts must be equal");
  }
  const int l = c.qubits_in();
  const std::size_t d = qubit_dim(l);
  ComplexMatrix s = swap_matrix(l);
  s *= 1.0 / static_cast<double>(d);
  return PseudoDensityMatrix(hermitian_part(apply_to_second(c, s, d)), l, l);
}

namespace detail {
inline constexpr double kNegativeZeroClamp = 1e-12;

inline double clamp_log(double value) {
  if (value < 0.0 && value > -kNegativeZeroClamp) return 0.0;
  return value;
}
}  // namespace detail

/// F(R) = log2 ||R||_1.
inline double causality_F(const PseudoDensityMatrix& r) {
  return detail::clamp_log(std::log2(trace_norm(r.matrix())));
}

/// f_tr(R) = ||R||_1 - 1.
inline double f_tr(const PseudoDensityMatrix& r) { return trace_norm(r.matrix()) - 1.0; }

/// log2 ||T_B(state)||_1 for a bipartite operator on C^d1 (x) C^d2.
inline double log_negativity(const ComplexMatrix& state, std::size_t d1, std::size_t d2) {
  if (!is_hermitian(state)) throw InvalidArgument("log_negativity: state is not Hermitian");
  if (std::abs(state.trace() - 1.0) > 1e-9) throw InvalidArgument("log_negativity: trace is not 1");
  return detail::clamp_log(std::log2(trace_norm(partial_transpose(state, d1, d2, 1))));
}

/// Max-entry residual of
///   (I (x) K) SWAP_k (I (x) K^dagger) - (K^dagger (x) I) SWAP_m (K (x) I)
/// for a linear map K from k qubits to m qubits.
inline double lemma1_check(const ComplexMatrix& k_map, int k, int m) {
  const std::size_t dk = qubit_dim(k);
  const std::size_t dm = qubit_dim(m);
  if (k_map.rows() != dm || k_map.cols() != dk) {
    throw InvalidArgument("lemma1_check: K must have shape 2^m x 2^k");
  }
  const ComplexMatrix lhs =
      matmul(matmul(kron(ComplexMatrix::identity(dk), k_map), swap_permutation_form(k)),
             kron(ComplexMatrix::identity(dk), dagger(k_map)));
  const ComplexMatrix rhs =
      matmul(matmul(kron(dagger(k_map), ComplexMatrix::identity(dm)), swap_permutation_form(m)),
             kron(k_map, ComplexMatrix::identity(dm)));
  return max_abs_diff(lhs, rhs);
}

}  // namespace causal
