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

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "causal/eigen.hpp"
#include "causal/matrix.hpp"
#include "causal/random.hpp"

namespace causal {

/// A map failed a channel invariant (complete positivity, trace preservation).
class ChannelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kCompletenessTol = 1e-9;
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kMarginalTol = 1e-8;
inline constexpr double kKrausDropTol = 1e-10;

struct ShiftedDepolarizingParams {
  double p;
  double gamma;
};

/// Completely positive trace-preserving map between qubit registers, held as a
/// Kraus list together with its trace-one Choi matrix. Immutable once built.
class QuantumChannel {
 public:
  int qubits_in() const noexcept { return qubits_in_; }
  int qubits_out() const noexcept { return qubits_out_; }
  std::size_t dim_in() const noexcept { return qubit_dim(qubits_in_); }
  std::size_t dim_out() const noexcept { return qubit_dim(qubits_out_); }
  const std::vector<ComplexMatrix>& kraus() const noexcept { return kraus_; }
  const ComplexMatrix& choi() const noexcept { return choi_; }
  const std::string& label() const noexcept { return label_; }

  /// Set only for channels built by shifted_depolarizing(); lets callers pick
  /// the closed-form bound without re-deriving parameters from the action.
  const std::optional<ShiftedDepolarizingParams>& shifted_depolarizing_params() const noexcept {
    return shifted_params_;
  }

  QuantumChannel with_label(std::string label) const {
    QuantumChannel c = *this;
    c.label_ = std::move(label);
    return c;
  }

  friend QuantumChannel from_kraus(std::vector<ComplexMatrix> ops, int qubits_in, int qubits_out,
                                   std::string label);
  friend QuantumChannel shifted_depolarizing(double p, double gamma);

 private:
  QuantumChannel(int qin, int qout, std::vector<ComplexMatrix> kraus, ComplexMatrix choi,
                 std::string label)
      : qubits_in_(qin), qubits_out_(qout), kraus_(std::move(kraus)), choi_(std::move(choi)),
        label_(std::move(label)) {}

  int qubits_in_;
  int qubits_out_;
  std::vector<ComplexMatrix> kraus_;
  ComplexMatrix choi_;
  std::string label_;
  std::optional<ShiftedDepolarizingParams> shifted_params_;
};

/// max |sum_k A_k^dagger A_k - I|.
inline double completeness_residual(std::span<const ComplexMatrix> ops) {
  if (ops.empty()) throw InvalidArgument("completeness_residual: empty Kraus list");
  ComplexMatrix sum(ops.front().cols(), ops.front().cols());
  for (const auto& a : ops) sum += matmul(dagger(a), a);
  return max_abs_diff(sum, ComplexMatrix::identity(sum.rows()));
}

/// Trace-one Choi matrix (1/d_in) sum_{x,y} |x><y| (x) N(|x><y|) of a Kraus list.
/// Index order: input (reference) factor first, output factor second.
inline ComplexMatrix choi_from_kraus(std::span<const ComplexMatrix> ops) {
  const std::size_t din = ops.front().cols();
  const std::size_t dout = ops.front().rows();
  ComplexMatrix j(din * dout, din * dout);
  for (const auto& a : ops)
    for (std::size_t x = 0; x < din; ++x)
      for (std::size_t s = 0; s < dout; ++s) {
        const Complex lhs = a(s, x);
        if (lhs == Complex{}) continue;
        for (std::size_t y = 0; y < din; ++y)
          for (std::size_t t = 0; t < dout; ++t) j(x * dout + s, y * dout + t) += lhs * std::conj(a(t, y));
      }
  j *= 1.0 / static_cast<double>(din);
  return j;
}

inline QuantumChannel from_kraus(std::vector<ComplexMatrix> ops, int qubits_in, int qubits_out,
                                 std::string label = "kraus") {
  if (qubits_in < 1 || qubits_out < 1) throw InvalidArgument("from_kraus: qubit counts must be positive");
  if (ops.empty()) throw InvalidArgument("from_kraus: empty Kraus list");
  const std::size_t din = qubit_dim(qubits_in);
  const std::size_t dout = qubit_dim(qubits_out);
  for (const auto& a : ops) {
    if (a.rows() != dout || a.cols() != din) {
      throw InvalidArgument("from_kraus: Kraus operator has shape " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + ", expected " + std::to_string(dout) + "x" +
                            std::to_string(din));
    }
  }
  const double residual = completeness_residual(ops);
  if (!(residual < kCompletenessTol)) {
    std::ostringstream msg;
    msg << "completeness violation: max|sum A^dagger A - I| = " << residual;
    throw ChannelError(msg.str());
  }
  ComplexMatrix j = hermitian_part(choi_from_kraus(ops));
  return QuantumChannel(qubits_in, qubits_out, std::move(ops), std::move(j), std::move(label));
}

/// Applies the Kraus map to any square operator of the input dimension.
inline ComplexMatrix apply(const QuantumChannel& c, const ComplexMatrix& x) {
  if (!x.is_square() || x.rows() != c.dim_in()) {
    throw InvalidArgument("apply: operator dimension does not match channel input");
  }
  ComplexMatrix out(c.dim_out(), c.dim_out());
  for (const auto& a : c.kraus()) out += sandwich(a, x);
  return out;
}

/// (I (x) N)(m) for an operator m on C^dim_first (x) C^{d_in}.
inline ComplexMatrix apply_to_second(const QuantumChannel& c, const ComplexMatrix& m,
                                     std::size_t dim_first) {
  const std::size_t din = c.dim_in();
  const std::size_t dout = c.dim_out();
  if (!m.is_square() || m.rows() != dim_first * din) {
    throw InvalidArgument("apply_to_second: operator dimension does not match");
  }
  ComplexMatrix out(dim_first * dout, dim_first * dout);
  ComplexMatrix block(din, din);
  for (std::size_t i = 0; i < dim_first; ++i)
    for (std::size_t j = 0; j < dim_first; ++j) {
      for (std::size_t r = 0; r < din; ++r)
        for (std::size_t s = 0; s < din; ++s) block(r, s) = m(i * din + r, j * din + s);
      const ComplexMatrix mapped = apply(c, block);
      for (std::size_t r = 0; r < dout; ++r)
        for (std::size_t s = 0; s < dout; ++s) out(i * dout + r, j * dout + s) = mapped(r, s);
    }
  return out;
}

inline const ComplexMatrix& choi(const QuantumChannel& c) { return c.choi(); }

/// Kraus operators from the spectrum of a trace-one Choi matrix.
inline QuantumChannel kraus_from_choi(const ComplexMatrix& j, int qubits_in, int qubits_out,
                                      std::string label = "choi") {
  const std::size_t din = qubit_dim(qubits_in);
  const std::size_t dout = qubit_dim(qubits_out);
  if (!j.is_square() || j.rows() != din * dout) {
    throw InvalidArgument("kraus_from_choi: Choi matrix has the wrong dimension");
  }
  if (!is_hermitian(j)) throw ChannelError("not completely positive: Choi matrix is not Hermitian");
  if (std::abs(j.trace() - 1.0) > 1e-9) throw ChannelError("not trace preserving: Choi trace differs from 1");
  const std::size_t dims[] = {din, dout};
  const std::size_t keep[] = {0};
  const ComplexMatrix marginal = partial_trace(j, dims, keep);
  ComplexMatrix expected = ComplexMatrix::identity(din);
  expected *= 1.0 / static_cast<double>(din);
  if (max_abs_diff(marginal, expected) > kMarginalTol) {
    throw ChannelError("not trace preserving: input marginal of the Choi matrix is not I/d");
  }
  const auto eig = herm_eig(j);
  if (eig.eigenvalues.front() < -kPsdTol) {
    std::ostringstream msg;
    msg << "not completely positive: Choi eigenvalue " << eig.eigenvalues.front();
    throw ChannelError(msg.str());
  }
  std::vector<ComplexMatrix> ops;
  for (std::size_t k = eig.eigenvalues.size(); k-- > 0;) {
    const double lambda = eig.eigenvalues[k];
    if (lambda <= kKrausDropTol) continue;
    const double scale = std::sqrt(lambda * static_cast<double>(din));
    ComplexMatrix a(dout, din);
    for (std::size_t x = 0; x < din; ++x)
      for (std::size_t s = 0; s < dout; ++s) a(s, x) = scale * eig.eigenvectors(x * dout + s, k);
    ops.push_back(std::move(a));
  }
  return from_kraus(std::move(ops), qubits_in, qubits_out, std::move(label));
}

/// Trace-one Choi matrix of a linear map given by its action on operators.
inline ComplexMatrix choi_from_action(const std::function<ComplexMatrix(const ComplexMatrix&)>& action,
                                      std::size_t din, std::size_t dout) {
  ComplexMatrix j(din * dout, din * dout);
  for (std::size_t x = 0; x < din; ++x)
    for (std::size_t y = 0; y < din; ++y) {
      const ComplexMatrix image = action(matrix_unit(din, x, y));
      for (std::size_t s = 0; s < dout; ++s)
        for (std::size_t t = 0; t < dout; ++t) j(x * dout + s, y * dout + t) = image(s, t);
    }
  j *= 1.0 / static_cast<double>(din);
  return j;
}

inline QuantumChannel identity_channel(int qubits) {
  return from_kraus({ComplexMatrix::identity(qubit_dim(qubits))}, qubits, qubits, "identity");
}

/// D o C: first C, then D.
inline QuantumChannel compose(const QuantumChannel& d, const QuantumChannel& c) {
  if (c.qubits_out() != d.qubits_in()) {
    throw InvalidArgument("compose: output of the first channel does not match input of the second");
  }
  std::vector<ComplexMatrix> ops;
  ops.reserve(d.kraus().size() * c.kraus().size());
  for (const auto& dj : d.kraus())
    for (const auto& ak : c.kraus()) ops.push_back(matmul(dj, ak));
  return from_kraus(std::move(ops), c.qubits_in(), d.qubits_out(), d.label() + " o " + c.label());
}

/// C (x) D acting on (inputs of C) (x) (inputs of D).
inline QuantumChannel tensor(const QuantumChannel& c, const QuantumChannel& d) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(c.kraus().size() * d.kraus().size());
  for (const auto& a : c.kraus())
    for (const auto& b : d.kraus()) ops.push_back(kron(a, b));
  return from_kraus(std::move(ops), c.qubits_in() + d.qubits_in(), c.qubits_out() + d.qubits_out(),
                    c.label() + " (x) " + d.label());
}

/// Channel with entrywise-conjugated Kraus operators. Satisfies
/// N(X)^T = conjugate(N)(X^T) for every operator X.
inline QuantumChannel conjugate(const QuantumChannel& c) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(c.kraus().size());
  for (const auto& a : c.kraus()) ops.push_back(conjugate_entries(a));
  return from_kraus(std::move(ops), c.qubits_in(), c.qubits_out(), "conj(" + c.label() + ")");
}

/// rho -> (1 - 4p) rho + 4p Tr(rho) (I + gamma Z) / 2, valid as a linear map on
/// arbitrary 2x2 operators.
inline ComplexMatrix shifted_depolarizing_action(double p, double gamma, const ComplexMatrix& x) {
  ComplexMatrix shift{{0.5 * (1.0 + gamma), 0.0}, {0.0, 0.5 * (1.0 - gamma)}};
  return (1.0 - 4.0 * p) * x + (4.0 * p) * x.trace() * shift;
}

inline void check_shifted_depolarizing_range(double p, double gamma) {
  if (!(p >= 0.0 && p <= 0.25)) throw InvalidArgument("shifted depolarizing: p must lie in [0, 1/4]");
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw InvalidArgument("shifted depolarizing: gamma must lie in [0, 1]");
  }
}

inline QuantumChannel shifted_depolarizing(double p, double gamma) {
  check_shifted_depolarizing_range(p, gamma);
  const ComplexMatrix j = choi_from_action(
      [p, gamma](const ComplexMatrix& x) { return shifted_depolarizing_action(p, gamma, x); }, 2, 2);
  std::ostringstream label;
  label << "shifted-depolarizing(p=" << p << ",gamma=" << gamma << ")";
  QuantumChannel c = kraus_from_choi(j, 1, 1, label.str());
  c.shifted_params_ = ShiftedDepolarizingParams{p, gamma};
  return c;
}

using ChannelParams = std::map<std::string, double>;

namespace detail {

inline double param_or(const ChannelParams& params, const std::string& key, double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

inline double required_param(const ChannelParams& params, const std::string& key,
                             const std::string& channel) {
  auto it = params.find(key);
  if (it == params.end()) throw InvalidArgument(channel + ": missing parameter '" + key + "'");
  return it->second;
}

}  // namespace detail

/// Named channel families:
///   identity              qubits (default 1)
///   depolarizing          p in [0, 1/4]: rho -> (1-4p) rho + 4p I/2
///   shifted-depolarizing  p in [0, 1/4], gamma in [0, 1]
///   dephasing             p in [0, 1]: Kraus sqrt(1-p) I, sqrt(p) Z
///   amplitude-damping     eta in [0, 1]: decay probability
inline QuantumChannel named_channel(const std::string& name, const ChannelParams& params = {}) {
  if (name == "identity") {
    const double q = detail::param_or(params, "qubits", 1.0);
    if (q < 1 || q > 3 || q != std::floor(q)) throw InvalidArgument("identity: qubits must be 1, 2 or 3");
    return identity_channel(static_cast<int>(q));
  }
  if (name == "depolarizing") {
    const double p = detail::required_param(params, "p", name);
    return shifted_depolarizing(p, 0.0).with_label("depolarizing(p=" + std::to_string(p) + ")");
  }
  if (name == "shifted-depolarizing") {
    return shifted_depolarizing(detail::required_param(params, "p", name),
                                detail::param_or(params, "gamma", 0.0));
  }
  if (name == "dephasing") {
    const double p = detail::required_param(params, "p", name);
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("dephasing: p must lie in [0, 1]");
    return from_kraus({std::sqrt(1.0 - p) * pauli(0), std::sqrt(p) * pauli(3)}, 1, 1,
                      "dephasing(p=" + std::to_string(p) + ")");
  }
  if (name == "amplitude-damping") {
    const double eta = detail::required_param(params, "eta", name);
    if (!(eta >= 0.0 && eta <= 1.0)) throw InvalidArgument("amplitude-damping: eta must lie in [0, 1]");
    ComplexMatrix a0{{1.0, 0.0}, {0.0, std::sqrt(1.0 - eta)}};
    ComplexMatrix a1{{0.0, std::sqrt(eta)}, {0.0, 0.0}};
    return from_kraus({a0, a1}, 1, 1, "amplitude-damping(eta=" + std::to_string(eta) + ")");
  }
  throw InvalidArgument("unknown channel name '" + name + "'");
}

/// Random CPTP map: a random isometry into system (x) environment followed by
/// tracing out the environment. Deterministic per seed.
inline QuantumChannel random_channel(int qubits_in, int qubits_out, int env_qubits, std::uint64_t seed) {
  if (env_qubits < 1) throw InvalidArgument("random_channel: env_qubits must be at least 1");
  if (qubits_in < 1 || qubits_out < 1) throw InvalidArgument("random_channel: qubit counts must be positive");
  const std::size_t din = qubit_dim(qubits_in);
  const std::size_t dout = qubit_dim(qubits_out);
  const std::size_t denv = qubit_dim(env_qubits);
  if (dout * denv < din) throw InvalidArgument("random_channel: environment too small for an isometry");
  Rng rng(seed);
  const ComplexMatrix v = random_isometry(dout * denv, din, rng);
  std::vector<ComplexMatrix> ops;
  ops.reserve(denv);
  for (std::size_t e = 0; e < denv; ++e) {
    ComplexMatrix a(dout, din);
    for (std::size_t s = 0; s < dout; ++s)
      for (std::size_t x = 0; x < din; ++x) a(s, x) = v(s * denv + e, x);
    ops.push_back(std::move(a));
  }
  return from_kraus(std::move(ops), qubits_in, qubits_out, "random(seed=" + std::to_string(seed) + ")");
}

/// Single-Kraus channel from an isometry V: rho -> V rho V^dagger.
inline QuantumChannel isometry_channel(const ComplexMatrix& v, int qubits_in, int qubits_out,
                                       std::string label = "isometry") {
  return from_kraus({v}, qubits_in, qubits_out, std::move(label));
}

}  // namespace causal
