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
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace causal {

using Complex = std::complex<double>;

/// Raised when an operation receives arguments that violate its contract
/// (shape mismatch, out-of-range parameter, non-Hermitian input, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Default tolerance for treating a matrix as Hermitian.
inline constexpr double kHermitianTol = 1e-10;

/// Dense complex matrix, row-major. Dimensions are always positive.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) {
      throw InvalidArgument("ComplexMatrix: dimensions must be positive");
    }
  }

  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
      throw InvalidArgument("ComplexMatrix: dimensions must be positive");
    }
    if (data_.size() != rows * cols) {
      throw InvalidArgument("ComplexMatrix: entry count does not match rows*cols");
    }
  }

  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
      : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    if (rows_ == 0 || cols_ == 0) {
      throw InvalidArgument("ComplexMatrix: dimensions must be positive");
    }
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) {
        throw InvalidArgument("ComplexMatrix: ragged initializer");
      }
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }

  /// |v><v| for a column vector given as a flat amplitude list.
  static ComplexMatrix outer(std::span<const Complex> v) {
    ComplexMatrix m(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const Complex> entries() const noexcept { return data_; }
  std::span<Complex> entries() noexcept { return data_; }

  Complex trace() const {
    if (!is_square()) throw InvalidArgument("trace: matrix is not square");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    require_same_shape(o, "operator+=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    require_same_shape(o, "operator-=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  ComplexMatrix& operator*=(Complex s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  void require_same_shape(const ComplexMatrix& o, const char* what) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw InvalidArgument(std::string(what) + ": shape mismatch");
    }
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

/// Largest entrywise modulus of a - b.
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidArgument("max_abs_diff: shape mismatch");
  }
  double worst = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) worst = std::max(worst, std::abs(ea[k] - eb[k]));
  return worst;
}

inline double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& x : a.entries()) s += std::norm(x);
  return std::sqrt(s);
}

inline ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw InvalidArgument("matmul: inner dimensions differ (" + std::to_string(a.cols()) +
                          " vs " + std::to_string(b.rows()) + ")");
  }
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

inline ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix d(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) d(j, i) = std::conj(a(i, j));
  return d;
}

inline ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

/// Entrywise complex conjugate (no transpose).
inline ComplexMatrix conjugate_entries(const ComplexMatrix& a) {
  ComplexMatrix c = a;
  for (auto& x : c.entries()) x = std::conj(x);
  return c;
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          k(i * b.rows() + r, j * b.cols() + c) = aij * b(r, c);
    }
  return k;
}

/// AB + BA.
inline ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw InvalidArgument("anticommutator: operands must be square with equal dimensions");
  }
  return matmul(a, b) + matmul(b, a);
}

/// A B A^dagger.
inline ComplexMatrix sandwich(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul(matmul(a, b), dagger(a));
}

inline bool is_hermitian(const ComplexMatrix& a, double tol = kHermitianTol) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      if (std::abs(a(i, j) - std::conj(a(j, i))) >= tol) return false;
  return true;
}

/// (M + M^dagger) / 2.
inline ComplexMatrix hermitian_part(const ComplexMatrix& a) {
  ComplexMatrix h = a + dagger(a);
  h *= 0.5;
  return h;
}

namespace detail {

inline std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                         [](std::size_t x, std::size_t y) { return x * y; });
}

/// Splits a flat index into per-subsystem digits (first subsystem most significant).
inline void unravel(std::size_t index, std::span<const std::size_t> dims,
                    std::span<std::size_t> digits) {
  for (std::size_t s = dims.size(); s-- > 0;) {
    digits[s] = index % dims[s];
    index /= dims[s];
  }
}

inline std::size_t ravel(std::span<const std::size_t> digits, std::span<const std::size_t> dims) {
  std::size_t index = 0;
  for (std::size_t s = 0; s < dims.size(); ++s) index = index * dims[s] + digits[s];
  return index;
}

inline void check_subsystems(const ComplexMatrix& a, std::span<const std::size_t> dims,
                             const char* what) {
  if (dims.empty()) throw InvalidArgument(std::string(what) + ": empty dimension list");
  for (auto d : dims)
    if (d == 0) throw InvalidArgument(std::string(what) + ": zero subsystem dimension");
  if (!a.is_square() || detail::product(dims) != a.rows()) {
    throw InvalidArgument(std::string(what) +
                          ": product of subsystem dimensions does not match matrix size");
  }
}

}  // namespace detail

/// Traces out every subsystem not listed in `keep`. Kept subsystems retain their
/// original relative order.
inline ComplexMatrix partial_trace(const ComplexMatrix& a, std::span<const std::size_t> dims,
                                   std::span<const std::size_t> keep) {
  detail::check_subsystems(a, dims, "partial_trace");
  std::vector<bool> kept(dims.size(), false);
  for (auto k : keep) {
    if (k >= dims.size() || kept[k]) {
      throw InvalidArgument("partial_trace: keep set has an invalid or repeated index");
    }
    kept[k] = true;
  }
  std::vector<std::size_t> kept_dims, traced_dims;
  for (std::size_t s = 0; s < dims.size(); ++s) (kept[s] ? kept_dims : traced_dims).push_back(dims[s]);
  if (kept_dims.empty()) {
    ComplexMatrix t(1, 1);
    t(0, 0) = a.trace();
    return t;
  }
  const std::size_t dk = detail::product(kept_dims);
  ComplexMatrix out(dk, dk);
  std::vector<std::size_t> ri(dims.size()), ci(dims.size());
  std::vector<std::size_t> rk(kept_dims.size()), ck(kept_dims.size());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    detail::unravel(r, dims, ri);
    for (std::size_t c = 0; c < a.cols(); ++c) {
      detail::unravel(c, dims, ci);
      bool diagonal_on_traced = true;
      std::size_t nk = 0;
      for (std::size_t s = 0; s < dims.size(); ++s) {
        if (kept[s]) {
          rk[nk] = ri[s];
          ck[nk] = ci[s];
          ++nk;
        } else if (ri[s] != ci[s]) {
          diagonal_on_traced = false;
          break;
        }
      }
      if (!diagonal_on_traced) continue;
      out(detail::ravel(rk, kept_dims), detail::ravel(ck, kept_dims)) += a(r, c);
    }
  }
  return out;
}

inline ComplexMatrix partial_trace(const ComplexMatrix& a, std::initializer_list<std::size_t> dims,
                                   std::initializer_list<std::size_t> keep) {
  return partial_trace(a, std::span(dims.begin(), dims.size()), std::span(keep.begin(), keep.size()));
}

/// Transposes the chosen factor of a bipartite operator on C^d1 (x) C^d2.
inline ComplexMatrix partial_transpose(const ComplexMatrix& a, std::size_t d1, std::size_t d2,
                                       int subsystem) {
  if (subsystem != 0 && subsystem != 1) {
    throw InvalidArgument("partial_transpose: subsystem must be 0 or 1");
  }
  if (d1 == 0 || d2 == 0 || !a.is_square() || a.rows() != d1 * d2) {
    throw InvalidArgument("partial_transpose: matrix is not d1*d2 square");
  }
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i1 = 0; i1 < d1; ++i1)
    for (std::size_t i2 = 0; i2 < d2; ++i2)
      for (std::size_t j1 = 0; j1 < d1; ++j1)
        for (std::size_t j2 = 0; j2 < d2; ++j2) {
          const Complex v = a(i1 * d2 + i2, j1 * d2 + j2);
          if (subsystem == 1) {
            out(i1 * d2 + j2, j1 * d2 + i2) = v;
          } else {
            out(j1 * d2 + i2, i1 * d2 + j2) = v;
          }
        }
  return out;
}

/// Reorders tensor factors: output factor k is input factor perm[k].
inline ComplexMatrix permute_subsystems(const ComplexMatrix& a, std::span<const std::size_t> dims,
                                        std::span<const std::size_t> perm) {
  detail::check_subsystems(a, dims, "permute_subsystems");
  if (perm.size() != dims.size()) throw InvalidArgument("permute_subsystems: bad permutation size");
  std::vector<bool> seen(dims.size(), false);
  for (auto p : perm) {
    if (p >= dims.size() || seen[p]) throw InvalidArgument("permute_subsystems: not a permutation");
    seen[p] = true;
  }
  std::vector<std::size_t> new_dims(dims.size());
  for (std::size_t k = 0; k < perm.size(); ++k) new_dims[k] = dims[perm[k]];

  const std::size_t n = a.rows();
  std::vector<std::size_t> map(n);
  std::vector<std::size_t> digits(dims.size()), new_digits(dims.size());
  for (std::size_t i = 0; i < n; ++i) {
    detail::unravel(i, dims, digits);
    for (std::size_t k = 0; k < perm.size(); ++k) new_digits[k] = digits[perm[k]];
    map[i] = detail::ravel(new_digits, new_dims);
  }
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(map[i], map[j]) = a(i, j);
  return out;
}

inline ComplexMatrix permute_subsystems(const ComplexMatrix& a, std::initializer_list<std::size_t> dims,
                                        std::initializer_list<std::size_t> perm) {
  return permute_subsystems(a, std::span(dims.begin(), dims.size()), std::span(perm.begin(), perm.size()));
}

/// Pauli matrix sigma_i, i = 0 (identity), 1 (X), 2 (Y), 3 (Z).
inline ComplexMatrix pauli(int i) {
  using namespace std::complex_literals;
  switch (i) {
    case 0: return {{1.0, 0.0}, {0.0, 1.0}};
    case 1: return {{0.0, 1.0}, {1.0, 0.0}};
    case 2: return {{0.0, -1i}, {1i, 0.0}};
    case 3: return {{1.0, 0.0}, {0.0, -1.0}};
    default: throw InvalidArgument("pauli: index must be in 0..3");
  }
}

/// Computational basis ket |index> of dimension dim, as a flat amplitude vector.
inline std::vector<Complex> basis_ket(std::size_t dim, std::size_t index) {
  if (index >= dim) throw InvalidArgument("basis_ket: index out of range");
  std::vector<Complex> v(dim);
  v[index] = 1.0;
  return v;
}

/// Matrix unit |i><j| of dimension dim.
inline ComplexMatrix matrix_unit(std::size_t dim, std::size_t i, std::size_t j) {
  ComplexMatrix m(dim, dim);
  m(i, j) = 1.0;
  return m;
}

inline std::size_t qubit_dim(int qubits) {
  if (qubits < 0 || qubits > 30) throw InvalidArgument("qubit count out of range");
  return std::size_t{1} << qubits;
}

}  // namespace causal
