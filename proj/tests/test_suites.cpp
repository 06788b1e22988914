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

#include "causal/suites.hpp"

#include <gtest/gtest.h>

using namespace causal;

namespace {

void expect_suite_passes(const SuiteReport& rep) {
  EXPECT_FALSE(rep.checks.empty());
  for (const auto& c : rep.checks) {
    EXPECT_TRUE(c.passed()) << rep.suite << "/" << c.name << " worst=" << c.worst << " tol=" << c.tolerance;
  }
  EXPECT_TRUE(rep.passed());
}

}  // namespace

TEST(suites, pdm) { expect_suite_passes(run_pdm_suite(1, 100)); }

TEST(suites, channel_maps) {
  const auto rep = run_lemma_suite(2, 50);
  expect_suite_passes(rep);
  EXPECT_LT(rep.checks.front().worst, 1e-10);
}

TEST(suites, fidelity) { expect_suite_passes(run_fidelity_suite(3, 100)); }

TEST(suites, bounds) { expect_suite_passes(run_bounds_suite(4, 30)); }

TEST(suites, check_result_accounting) {
  CheckResult r{"x", 1e-9};
  EXPECT_FALSE(r.passed());
  r.record(0.0);
  r.record(1e-10);
  EXPECT_TRUE(r.passed());
  r.record(1e-3);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.failures, 1);
  EXPECT_EQ(r.worst, 1e-3);
}

TEST(suites, zero_cases_rejected) {
  EXPECT_THROW(run_pdm_suite(1, 0), InvalidArgument);
  EXPECT_THROW(run_bounds_suite(1, 0), InvalidArgument);
}
