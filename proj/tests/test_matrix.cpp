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

#include "causal/matrix.hpp"

#include <gtest/gtest.h>

#include "causal/random.hpp"

using namespace causal;
using namespace std::complex_literals;

namespace {

const ComplexMatrix I2 = pauli(0);
const ComplexMatrix X = pauli(1);
const ComplexMatrix Y = pauli(2);
const ComplexMatrix Z = pauli(3);

ComplexMatrix phi_plus_projector() {
  std::vector<Complex> v{1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0)};
  return ComplexMatrix::outer(v);
}

}  // namespace

TEST(matrix, construction_rejects_bad_shapes) {
  EXPECT_THROW(ComplexMatrix(0, 3), InvalidArgument);
  EXPECT_THROW(ComplexMatrix(2, 2, std::vector<Complex>(3)), InvalidArgument);
  EXPECT_THROW((ComplexMatrix{{1.0, 2.0}, {3.0}}), InvalidArgument);
}

TEST(matrix, matmul_pauli_algebra) {
  EXPECT_EQ(matmul(I2, X), X);
  EXPECT_EQ(matmul(X, X), I2);
  EXPECT_LT(max_abs_diff(matmul(Z, X), 1i * Y), 1e-15);
}

TEST(matrix, matmul_dimension_mismatch) {
  EXPECT_THROW(matmul(ComplexMatrix(2, 3), ComplexMatrix(2, 3)), InvalidArgument);
}

TEST(matrix, dagger) {
  EXPECT_EQ(dagger(X), X);
  EXPECT_EQ(dagger(1i * I2), -1i * I2);
  Rng rng(3);
  const auto a = random_gaussian_matrix(3, 5, rng);
  EXPECT_EQ(dagger(dagger(a)), a);
  EXPECT_EQ(dagger(a).rows(), 5u);
}

TEST(matrix, kron) {
  EXPECT_EQ(kron(I2, I2), ComplexMatrix::identity(4));
  const auto zz = kron(Z, Z);
  const double expected[] = {1, -1, -1, 1};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(zz(i, i), Complex(expected[i]));
  Rng rng(5);
  for (int rep = 0; rep < 10; ++rep) {
    const auto a = random_gaussian_matrix(3, 3, rng);
    const auto b = random_gaussian_matrix(2, 2, rng);
    EXPECT_LT(std::abs(kron(a, b).trace() - a.trace() * b.trace()), 1e-12);
  }
}

TEST(matrix, anticommutator) {
  EXPECT_EQ(anticommutator(X, X), 2.0 * I2);
  EXPECT_EQ(anticommutator(X, Z), ComplexMatrix(2, 2));
  Rng rng(7);
  const auto a = random_gaussian_matrix(4, 4, rng);
  EXPECT_LT(max_abs_diff(anticommutator(ComplexMatrix::identity(4), a), 2.0 * a), 1e-14);
  EXPECT_THROW(anticommutator(X, ComplexMatrix::identity(4)), InvalidArgument);
}

TEST(matrix, partial_trace) {
  const auto marginal = partial_trace(phi_plus_projector(), {2, 2}, {0});
  EXPECT_LT(max_abs_diff(marginal, 0.5 * I2), 1e-15);

  Rng rng(11);
  const auto a = random_gaussian_matrix(2, 2, rng);
  const auto b = random_gaussian_matrix(3, 3, rng);
  EXPECT_LT(max_abs_diff(partial_trace(kron(a, b), {2, 3}, {0}), b.trace() * a), 1e-12);
  EXPECT_LT(max_abs_diff(partial_trace(kron(a, b), {2, 3}, {1}), a.trace() * b), 1e-12);

  const auto m = random_gaussian_matrix(12, 12, rng);
  EXPECT_LT(std::abs(partial_trace(m, {2, 3, 2}, {0, 2}).trace() - m.trace()), 1e-12);
  EXPECT_LT(std::abs(partial_trace(m, {2, 3, 2}, {}).trace() - m.trace()), 1e-12);
}

TEST(matrix, partial_trace_rejects_inconsistent_dims) {
  const auto m = ComplexMatrix::identity(4);
  EXPECT_THROW(partial_trace(m, {2, 3}, {0}), InvalidArgument);
  EXPECT_THROW(partial_trace(m, {2, 2}, {2}), InvalidArgument);
  EXPECT_THROW(partial_trace(m, {2, 2}, {0, 0}), InvalidArgument);
}

TEST(matrix, partial_transpose) {
  ComplexMatrix swap(4, 4);
  swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
  EXPECT_LT(max_abs_diff(partial_transpose(phi_plus_projector(), 2, 2, 1), 0.5 * swap), 1e-15);

  Rng rng(13);
  const auto a = random_gaussian_matrix(2, 2, rng);
  const auto b = random_gaussian_matrix(3, 3, rng);
  EXPECT_LT(max_abs_diff(partial_transpose(kron(a, b), 2, 3, 1), kron(a, transpose(b))), 1e-14);
  EXPECT_LT(max_abs_diff(partial_transpose(kron(a, b), 2, 3, 0), kron(transpose(a), b)), 1e-14);

  const auto m = random_gaussian_matrix(6, 6, rng);
  EXPECT_EQ(partial_transpose(partial_transpose(m, 2, 3, 1), 2, 3, 1), m);
  EXPECT_THROW(partial_transpose(m, 2, 2, 1), InvalidArgument);
  EXPECT_THROW(partial_transpose(m, 2, 3, 2), InvalidArgument);
}

TEST(matrix, partial_transpose_preserves_trace_and_hermiticity) {
  Rng rng(17);
  for (int rep = 0; rep < 50; ++rep) {
    const auto h = random_hermitian(8, rng);
    for (int sub : {0, 1}) {
      const auto t = partial_transpose(h, 2, 4, sub);
      EXPECT_TRUE(is_hermitian(t));
      EXPECT_LT(std::abs(t.trace() - h.trace()), 1e-12);
    }
  }
}

TEST(matrix, permute_subsystems_matches_kron_order) {
  Rng rng(19);
  const auto a = random_gaussian_matrix(2, 2, rng);
  const auto b = random_gaussian_matrix(3, 3, rng);
  const auto c = random_gaussian_matrix(2, 2, rng);
  const auto abc = kron(kron(a, b), c);
  EXPECT_LT(max_abs_diff(permute_subsystems(abc, {2, 3, 2}, {2, 0, 1}), kron(kron(c, a), b)), 1e-14);
  EXPECT_THROW(permute_subsystems(abc, {2, 3, 2}, {0, 0, 1}), InvalidArgument);
}

TEST(matrix, hermitian_check) {
  EXPECT_TRUE(is_hermitian(Y));
  EXPECT_FALSE(is_hermitian(1i * Y));
  EXPECT_FALSE(is_hermitian(ComplexMatrix(2, 3)));
  ComplexMatrix nearly = X;
  nearly(0, 1) += 1e-12;
  EXPECT_TRUE(is_hermitian(nearly));
}
