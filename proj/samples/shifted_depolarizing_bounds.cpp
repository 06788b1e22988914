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

// Prints the causality and Holevo-Werner bounds of the shifted depolarizing
// channel along gamma at a fixed p.
//
//   ./shifted_depolarizing_bounds [p]

#include <cstdio>
#include <cstdlib>

#include "causal/causal.hpp"

int main(int argc, char** argv) {
  const double p = argc > 1 ? std::atof(argv[1]) : 0.15;
  causal::OptimizerConfig cfg;
  cfg.seed = 1;
  std::printf("%6s %12s %12s %12s\n", "gamma", "causality", "hw", "hw-causal");
  for (double gamma : causal::linspace(0.0, 1.0, 5)) {
    const auto c = causal::shifted_depolarizing(p, gamma);
    const double f = causal::causality_bound(c).value;
    const double hw = causal::hw_bound(c, cfg).value;
    std::printf("%6.2f %12.8f %12.8f %12.3e\n", gamma, f, hw, hw - f);
  }
}
