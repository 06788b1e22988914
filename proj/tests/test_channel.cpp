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

#include "causal/channel.hpp"

#include <gtest/gtest.h>

#include "causal/eigen.hpp"
#include "causal/random.hpp"

using namespace causal;
using namespace std::complex_literals;

namespace {

ComplexMatrix ket_projector(std::size_t dim, std::size_t k) { return ComplexMatrix::outer(basis_ket(dim, k)); }

ComplexMatrix phi_plus_projector() {
  std::vector<Complex> v{1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0)};
  return ComplexMatrix::outer(v);
}

ComplexMatrix half_identity() { return 0.5 * ComplexMatrix::identity(2); }

// Largest output discrepancy of two single-qubit-input channels over the
// matrix-unit basis, which determines a linear map completely.
double action_distance(const QuantumChannel& a, const QuantumChannel& b) {
  double worst = 0.0;
  for (std::size_t x = 0; x < a.dim_in(); ++x)
    for (std::size_t y = 0; y < a.dim_in(); ++y) {
      const auto e = matrix_unit(a.dim_in(), x, y);
      worst = std::max(worst, max_abs_diff(apply(a, e), apply(b, e)));
    }
  return worst;
}

QuantumChannel full_dephasing() {
  const double h = std::sqrt(0.5);
  return from_kraus({h * pauli(0), h * pauli(3)}, 1, 1);
}

}  // namespace

TEST(channel, from_kraus_examples) {
  const auto id = from_kraus({pauli(0)}, 1, 1);
  Rng rng(1);
  const auto rho = random_density_matrix(2, rng);
  EXPECT_LT(max_abs_diff(apply(id, rho), rho), 1e-15);

  const auto flip = from_kraus({pauli(1)}, 1, 1);
  EXPECT_LT(max_abs_diff(apply(flip, ket_projector(2, 0)), ket_projector(2, 1)), 1e-15);

  const auto deph = full_dephasing();
  EXPECT_LT(max_abs_diff(apply(deph, 0.5 * pauli(1) + half_identity()), half_identity()), 1e-15);
}

TEST(channel, from_kraus_rejects_incomplete_set) {
  try {
    from_kraus({0.5 * pauli(0)}, 1, 1);
    FAIL() << "expected ChannelError";
  } catch (const ChannelError& e) {
    EXPECT_NE(std::string(e.what()).find("completeness violation"), std::string::npos);
  }
  EXPECT_THROW(from_kraus({ComplexMatrix::identity(4)}, 1, 1), InvalidArgument);
  EXPECT_THROW(from_kraus({}, 1, 1), InvalidArgument);
}

TEST(channel, apply_examples) {
  Rng rng(2);
  for (int rep = 0; rep < 5; ++rep) {
    const auto rho = random_density_matrix(2, rng);
    EXPECT_LT(max_abs_diff(apply(shifted_depolarizing(0.25, 1.0), rho), ket_projector(2, 0)), 1e-12);
  }
  EXPECT_THROW(apply(identity_channel(1), ComplexMatrix::identity(4)), InvalidArgument);
}

TEST(channel, choi_examples) {
  EXPECT_LT(max_abs_diff(choi(identity_channel(1)), phi_plus_projector()), 1e-15);
  EXPECT_LT(max_abs_diff(choi(shifted_depolarizing(0.25, 0.0)), 0.25 * ComplexMatrix::identity(4)), 1e-12);
}

TEST(channel, choi_is_state_with_maximally_mixed_marginal) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int qin = 1 + static_cast<int>(seed % 2);
    const int qout = 1 + static_cast<int>((seed / 2) % 2);
    const auto c = random_channel(qin, qout, 1 + static_cast<int>(seed % 3), seed);
    EXPECT_LT(completeness_residual(c.kraus()), 1e-12);
    const auto& j = c.choi();
    EXPECT_TRUE(is_hermitian(j));
    EXPECT_NEAR(j.trace().real(), 1.0, 1e-12);
    EXPECT_GT(eigenvalues(j).front(), -1e-12);
    const auto marginal = partial_trace(j, {c.dim_in(), c.dim_out()}, {0});
    EXPECT_LT(max_abs_diff(marginal, (1.0 / static_cast<double>(c.dim_in())) * ComplexMatrix::identity(c.dim_in())),
              1e-12);
  }
}

TEST(channel, kraus_from_choi_examples) {
  const auto single = kraus_from_choi(phi_plus_projector(), 1, 1);
  ASSERT_EQ(single.kraus().size(), 1u);
  const auto& a = single.kraus().front();
  // A unit-modulus multiple of the identity.
  EXPECT_NEAR(std::abs(a(0, 0)), 1.0, 1e-12);
  EXPECT_LT(std::abs(a(0, 0) - a(1, 1)), 1e-12);
  EXPECT_LT(std::abs(a(0, 1)) + std::abs(a(1, 0)), 1e-12);
}

TEST(channel, kraus_from_choi_of_maximally_mixed_is_fully_depolarizing) {
  const auto c = kraus_from_choi(0.25 * ComplexMatrix::identity(4), 1, 1);
  EXPECT_EQ(c.kraus().size(), 4u);
  // Reference action: sum_i (s_i/2) X (s_i/2) over the four Paulis.
  for (int basis = 0; basis < 4; ++basis) {
    const auto x = pauli(basis);
    ComplexMatrix expected(2, 2);
    for (int i = 0; i < 4; ++i) expected += sandwich(0.5 * pauli(i), x);
    EXPECT_LT(max_abs_diff(apply(c, x), expected), 1e-12);
  }
  EXPECT_LT(max_abs_diff(apply(c, pauli(0)), pauli(0)), 1e-12);
  for (int i = 1; i < 4; ++i) EXPECT_LT(max_abs_diff(apply(c, pauli(i)), ComplexMatrix(2, 2)), 1e-12);
}

TEST(channel, kraus_from_choi_rejections) {
  // SWAP/2: unit trace and maximally mixed marginal, but eigenvalue -1/2.
  const ComplexMatrix not_cp = partial_transpose(phi_plus_projector(), 2, 2, 1);
  try {
    kraus_from_choi(not_cp, 1, 1);
    FAIL() << "expected ChannelError";
  } catch (const ChannelError& e) {
    EXPECT_NE(std::string(e.what()).find("not completely positive"), std::string::npos);
  }
  // Unit trace but the input marginal is |0><0| rather than I/2.
  ComplexMatrix skewed = kron(ket_projector(2, 0), half_identity());
  try {
    kraus_from_choi(skewed, 1, 1);
    FAIL() << "expected ChannelError";
  } catch (const ChannelError& e) {
    EXPECT_NE(std::string(e.what()).find("not trace preserving"), std::string::npos);
  }
  EXPECT_THROW(kraus_from_choi(ComplexMatrix::identity(2), 1, 1), InvalidArgument);
}

TEST(channel, kraus_roundtrip_preserves_action) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto c = random_channel(1, 1 + static_cast<int>(seed % 2), 2, seed);
    const auto back = kraus_from_choi(c.choi(), c.qubits_in(), c.qubits_out());
    EXPECT_LT(action_distance(c, back), 1e-10);
  }
}

TEST(channel, compose_examples) {
  Rng rng(3);
  const auto c = random_channel(1, 1, 1, 77);
  EXPECT_LT(action_distance(compose(identity_channel(1), c), c), 1e-14);

  const auto x = from_kraus({pauli(1)}, 1, 1);
  EXPECT_LT(action_distance(compose(x, x), identity_channel(1)), 1e-15);

  const auto d = full_dephasing();
  EXPECT_LT(action_distance(compose(d, d), d), 1e-14);

  EXPECT_THROW(compose(identity_channel(2), identity_channel(1)), InvalidArgument);
}

TEST(channel, compose_order) {
  // amplitude damping then bit flip differs from bit flip then amplitude damping.
  const auto ad = named_channel("amplitude-damping", {{"eta", 1.0}});
  const auto x = from_kraus({pauli(1)}, 1, 1);
  const auto rho = ket_projector(2, 1);
  EXPECT_LT(max_abs_diff(apply(compose(x, ad), rho), ket_projector(2, 1)), 1e-15);
  EXPECT_LT(max_abs_diff(apply(compose(ad, x), rho), ket_projector(2, 0)), 1e-15);
}

TEST(channel, tensor_examples) {
  const auto two = tensor(identity_channel(1), identity_channel(1));
  EXPECT_EQ(two.qubits_in(), 2);
  EXPECT_LT(action_distance(two, identity_channel(2)), 1e-15);

  Rng rng(5);
  const auto a = random_channel(1, 1, 1, 5);
  const auto b = random_channel(1, 1, 2, 6);
  const auto ab = tensor(a, b);
  for (int rep = 0; rep < 10; ++rep) {
    const auto r1 = random_density_matrix(2, rng);
    const auto r2 = random_density_matrix(2, rng);
    EXPECT_LT(max_abs_diff(apply(ab, kron(r1, r2)), kron(apply(a, r1), apply(b, r2))), 1e-13);
  }
}

TEST(channel, conjugate_examples) {
  const auto d = full_dephasing();
  EXPECT_LT(action_distance(conjugate(d), d), 1e-15);
  const auto c = random_channel(1, 1, 2, 11);
  EXPECT_LT(action_distance(conjugate(conjugate(c)), c), 1e-15);
}

TEST(channel, conjugate_intertwines_with_transpose) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto c = random_channel(1, 1, 2, 1000 + seed);
    const auto cc = conjugate(c);
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t y = 0; y < 2; ++y) {
        const auto e = matrix_unit(2, x, y);
        EXPECT_LT(max_abs_diff(transpose(apply(c, e)), apply(cc, transpose(e))), 1e-10);
      }
  }
  Rng rng(13);
  for (int rep = 0; rep < 100; ++rep) {
    const auto c = random_channel(1, 1, 1 + rep % 2, derive_seed(13, rep));
    const auto x = random_gaussian_matrix(2, 2, rng);
    EXPECT_LT(max_abs_diff(transpose(apply(c, x)), apply(conjugate(c), transpose(x))), 1e-10);
  }
}

TEST(channel, shifted_depolarizing_examples) {
  Rng rng(17);
  const auto rho = random_density_matrix(2, rng);
  EXPECT_LT(max_abs_diff(apply(shifted_depolarizing(0.0, 0.7), rho), rho), 1e-12);
  EXPECT_LT(max_abs_diff(apply(shifted_depolarizing(0.25, 0.0), rho), half_identity()), 1e-12);
  EXPECT_LT(max_abs_diff(apply(shifted_depolarizing(0.25, 1.0), rho), ket_projector(2, 0)), 1e-12);
}

TEST(channel, shifted_depolarizing_pauli_action) {
  // I -> I + 4p gamma Z, sigma_i -> (1 - 4p) sigma_i.
  for (double p : {0.0, 0.05, 0.13, 0.25})
    for (double g : {0.0, 0.4, 1.0}) {
      const auto c = shifted_depolarizing(p, g);
      EXPECT_LT(max_abs_diff(apply(c, pauli(0)), pauli(0) + (4 * p * g) * pauli(3)), 1e-12);
      for (int i = 1; i < 4; ++i) EXPECT_LT(max_abs_diff(apply(c, pauli(i)), (1 - 4 * p) * pauli(i)), 1e-12);
      ASSERT_TRUE(c.shifted_depolarizing_params().has_value());
      EXPECT_EQ(c.shifted_depolarizing_params()->p, p);
    }
}

TEST(channel, shifted_depolarizing_range) {
  EXPECT_THROW(shifted_depolarizing(-0.01, 0.0), InvalidArgument);
  EXPECT_THROW(shifted_depolarizing(0.26, 0.0), InvalidArgument);
  EXPECT_THROW(shifted_depolarizing(0.1, 1.1), InvalidArgument);
}

TEST(channel, named_channel_examples) {
  const auto id2 = named_channel("identity", {{"qubits", 2}});
  EXPECT_EQ(id2.qubits_in(), 2);
  EXPECT_LT(action_distance(id2, identity_channel(2)), 1e-15);

  EXPECT_LT(action_distance(named_channel("shifted-depolarizing", {{"p", 0.1}, {"gamma", 0.5}}),
                            shifted_depolarizing(0.1, 0.5)),
            1e-15);
  EXPECT_LT(action_distance(named_channel("amplitude-damping", {{"eta", 0.0}}), identity_channel(1)), 1e-15);
  EXPECT_LT(action_distance(named_channel("depolarizing", {{"p", 0.25}}), shifted_depolarizing(0.25, 0.0)), 1e-15);
  EXPECT_LT(action_distance(named_channel("dephasing", {{"p", 0.5}}), full_dephasing()), 1e-15);

  EXPECT_THROW(named_channel("teleporter"), InvalidArgument);
  EXPECT_THROW(named_channel("depolarizing"), InvalidArgument);
  EXPECT_THROW(named_channel("identity", {{"qubits", 4}}), InvalidArgument);
}

TEST(channel, random_channel_contract) {
  EXPECT_THROW(random_channel(1, 1, 0, 1), InvalidArgument);
  const auto a = random_channel(2, 1, 1, 42);
  const auto b = random_channel(2, 1, 1, 42);
  EXPECT_EQ(a.choi(), b.choi());
  EXPECT_EQ(a.kraus().size(), 2u);
  EXPECT_EQ(a.dim_in(), 4u);
  EXPECT_EQ(a.dim_out(), 2u);
}

TEST(channel, apply_to_second_matches_choi) {
  const auto c = random_channel(1, 2, 1, 9);
  const auto j = apply_to_second(c, phi_plus_projector(), 2);
  EXPECT_LT(max_abs_diff(j, c.choi()), 1e-14);
}
