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

#include "causal/sweep.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

using namespace causal;

namespace {

OptimizerConfig small_config() {
  OptimizerConfig cfg;
  cfg.restarts = 4;
  cfg.seed = 21;
  return cfg;
}

}  // namespace

TEST(sweep, linspace) {
  const auto g = linspace(0.0, 1.0, 21);
  ASSERT_EQ(g.size(), 21u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g.back(), 1.0);
  EXPECT_NEAR(g[5], 0.25, 1e-15);
  EXPECT_EQ(linspace(0.3, 0.9, 1), std::vector<double>{0.3});
  EXPECT_THROW(linspace(0.0, 1.0, 0), InvalidArgument);
}

TEST(sweep, single_point) {
  OptimizerConfig cfg;
  cfg.seed = 1;
  const auto rows = sweep_shifted_depol({0.1}, {0.0}, cfg, 1);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_LT(std::abs(rows[0].causality - rows[0].analytic), 1e-8);
  EXPECT_LT(std::abs(rows[0].hw - rows[0].causality), 1e-3);
}

TEST(sweep, grid_order_and_invariants) {
  const auto p = linspace(0.0, 0.25, 3);
  const auto g = linspace(0.0, 1.0, 3);
  const auto rows = sweep_shifted_depol(p, g, small_config(), 2);
  ASSERT_EQ(rows.size(), 9u);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    EXPECT_EQ(rows[k].p, p[k / 3]);
    EXPECT_EQ(rows[k].gamma, g[k % 3]);
    EXPECT_LT(std::abs(rows[k].causality - rows[k].analytic), 1e-8);
    EXPECT_GE(rows[k].hw_minus_causality, -1e-9);
    EXPECT_EQ(rows[k].hw_minus_causality, rows[k].hw - rows[k].causality);
  }
}

TEST(sweep, result_independent_of_thread_count) {
  const auto p = linspace(0.05, 0.2, 3);
  const auto g = linspace(0.0, 1.0, 2);
  const auto one = sweep_shifted_depol(p, g, small_config(), 1);
  const auto four = sweep_shifted_depol(p, g, small_config(), 4);
  std::ostringstream a, b;
  write_sweep_csv(a, one);
  write_sweep_csv(b, four);
  EXPECT_EQ(a.str(), b.str());
}

TEST(sweep, rejects_out_of_range_grid) {
  EXPECT_THROW(sweep_shifted_depol({0.3}, {0.0}, small_config(), 1), InvalidArgument);
  EXPECT_THROW(sweep_shifted_depol({0.1}, {1.5}, small_config(), 1), InvalidArgument);
}

TEST(sweep, csv_format) {
  std::vector<SweepRow> rows{{0.1, 0.5, 0.5, 0.5, 0.6, 0.1}, {1.0 / 3.0, 0.0, 0.0, 0.0, 0.0, 0.0}};
  std::ostringstream out;
  write_sweep_csv(out, rows);
  const std::string text = out.str();
  EXPECT_EQ(text.find('\r'), std::string::npos);
  EXPECT_EQ(text.substr(0, text.find('\n')), "p,gamma,causality,analytic,hw,hw_minus_causality");
  EXPECT_NE(text.find("\n0.333333333333,0,0,0,0,0\n"), std::string::npos);
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(1e-13), "1e-13");
}

TEST(sweep, thread_cap_from_environment) {
  ::setenv("CAUSAL_CAPACITY_THREADS", "3", 1);
  EXPECT_EQ(threads_from_env(), 3u);
  ::setenv("CAUSAL_CAPACITY_THREADS", "0", 1);
  EXPECT_EQ(threads_from_env(), 0u);
  ::setenv("CAUSAL_CAPACITY_THREADS", "many", 1);
  EXPECT_EQ(threads_from_env(), 0u);
  ::unsetenv("CAUSAL_CAPACITY_THREADS");
  EXPECT_EQ(threads_from_env(), 0u);
}
