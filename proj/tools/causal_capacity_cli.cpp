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

// causal-capacity: capacity upper bounds from the causality measure.
//
//   causal-capacity bound --channel identity --qubits 1 --method causality
//   causal-capacity sweep --out fig2.csv --seed 1
//   causal-capacity verify --suite all --cases 100 --seed 1
//   causal-capacity channel-info --channel my_channel.json
//
// Exit codes: 0 ok, 1 verification failure, 2 bad arguments, 3 invalid channel
// file, 4 unwritable output.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "causal/causal.hpp"

namespace {

using causal::QuantumChannel;
using nlohmann::json;

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kBadArguments = 2, kBadChannelFile = 3, kUnwritable = 4 };

/// Carries an exit code out of a subcommand.
struct CliFailure {
  int code;
  std::string message;
};

struct ChannelArgs {
  std::string channel;
  std::optional<double> qubits, p, gamma, eta;
};

void add_channel_options(CLI::App* cmd, ChannelArgs& args) {
  cmd->add_option("--channel", args.channel,
                  "Channel name (identity, depolarizing, shifted-depolarizing, dephasing, "
                  "amplitude-damping) or path to a channel JSON file")
      ->required();
  cmd->add_option("--qubits", args.qubits, "Qubit count (identity)");
  cmd->add_option("--p", args.p, "Noise parameter p");
  cmd->add_option("--gamma", args.gamma, "Shift gamma (shifted-depolarizing)");
  cmd->add_option("--eta", args.eta, "Damping probability (amplitude-damping)");
}

bool looks_like_file(const std::string& value) {
  if (value.size() >= 5 && value.compare(value.size() - 5, 5, ".json") == 0) return true;
  std::error_code ec;
  return std::filesystem::is_regular_file(value, ec);
}

QuantumChannel resolve_channel(const ChannelArgs& args) {
  if (looks_like_file(args.channel)) {
    try {
      return causal::load_channel_file(args.channel);
    } catch (const causal::ChannelFileError& e) {
      throw CliFailure{kBadChannelFile, e.what()};
    } catch (const causal::InvalidArgument& e) {
      throw CliFailure{kBadChannelFile, std::string("invalid channel file: ") + e.what()};
    }
  }
  causal::ChannelParams params;
  if (args.qubits) params["qubits"] = *args.qubits;
  if (args.p) params["p"] = *args.p;
  if (args.gamma) params["gamma"] = *args.gamma;
  if (args.eta) params["eta"] = *args.eta;
  try {
    return causal::named_channel(args.channel, params);
  } catch (const causal::InvalidArgument& e) {
    throw CliFailure{kBadArguments, e.what()};
  }
}

json complex_vector_json(const causal::ComplexMatrix& m) {
  json out = json::array();
  for (const auto& z : m.entries()) out.push_back({z.real(), z.imag()});
  return out;
}

json report_json(const causal::BoundReport& r) {
  json j;
  j["channel"] = r.channel_label;
  j["method"] = std::string(causal::to_string(r.method));
  j["value"] = r.value;
  j["diagnostics"] = r.diagnostics;
  if (!r.restart_optima.empty()) j["restart_optima"] = r.restart_optima;
  if (!r.note.empty()) j["note"] = r.note;
  if (r.best_input) j["best_input"] = complex_vector_json(*r.best_input);
  return j;
}

// ---------------------------------------------------------------------------
// bound

struct BoundArgs {
  ChannelArgs channel;
  std::string method = "causality";
  std::uint64_t seed = 0;
  int restarts = 32;
  int max_iters = 2000;
};

int run_bound(const BoundArgs& args) {
  const QuantumChannel c = resolve_channel(args.channel);
  causal::OptimizerConfig cfg;
  cfg.seed = args.seed;
  cfg.restarts = args.restarts;
  cfg.max_iters = args.max_iters;

  std::vector<causal::BoundReport> reports;
  try {
    cfg.validate();
    if (args.method == "causality") {
      reports.push_back(causal::causality_bound(c));
    } else if (args.method == "analytic") {
      const auto& sp = c.shifted_depolarizing_params();
      if (!sp) throw CliFailure{kBadArguments, "analytic bound requires a (shifted-)depolarizing channel"};
      causal::BoundReport a{c.label(), causal::BoundMethod::analytic_shifted_depol};
      a.value = causal::analytic_shifted_depol(sp->p, sp->gamma);
      a.diagnostics["p"] = sp->p;
      a.diagnostics["gamma"] = sp->gamma;
      reports.push_back(std::move(a));
    } else if (args.method == "hw") {
      reports.push_back(causal::hw_bound(c, cfg));
    } else if (args.method == "maxrains") {
      reports.push_back(causal::maxrains_surrogate(c));
    } else {  // all
      auto cmp = causal::compare_bounds(c, cfg);
      for (auto& [method, report] : cmp.reports) reports.push_back(std::move(report));
    }
  } catch (const causal::InvalidArgument& e) {
    throw CliFailure{kBadArguments, e.what()};
  }
  for (const auto& r : reports) std::cout << report_json(r).dump() << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
  double p_min = 0.0, p_max = 0.25;
  int p_steps = 26;
  double gamma_min = 0.0, gamma_max = 1.0;
  int gamma_steps = 21;
  std::string out;
  std::uint64_t seed = 0;
  int restarts = 32;
  int max_iters = 2000;
};

int run_sweep(const SweepArgs& args) {
  causal::OptimizerConfig cfg;
  cfg.seed = args.seed;
  cfg.restarts = args.restarts;
  cfg.max_iters = args.max_iters;
  std::vector<causal::SweepRow> rows;
  try {
    cfg.validate();
    const auto p_grid = causal::linspace(args.p_min, args.p_max, args.p_steps);
    const auto g_grid = causal::linspace(args.gamma_min, args.gamma_max, args.gamma_steps);
    for (double p : p_grid) causal::check_shifted_depolarizing_range(p, 0.0);
    for (double g : g_grid) causal::check_shifted_depolarizing_range(0.0, g);

    std::ofstream probe(args.out, std::ios::binary | std::ios::trunc);
    if (!probe) throw CliFailure{kUnwritable, "cannot write '" + args.out + "'"};
    probe.close();

    rows = causal::sweep_shifted_depol(p_grid, g_grid, cfg, causal::threads_from_env());
  } catch (const causal::InvalidArgument& e) {
    throw CliFailure{kBadArguments, e.what()};
  }
  std::ofstream out(args.out, std::ios::binary | std::ios::trunc);
  causal::write_sweep_csv(out, rows);
  out.flush();
  if (!out) throw CliFailure{kUnwritable, "failed while writing '" + args.out + "'"};
  json summary{{"rows", rows.size()}, {"out", args.out}, {"seed", args.seed}};
  std::cout << summary.dump() << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string suite = "all";
  int cases = 100;
  std::uint64_t seed = 0;
};

int run_verify(const VerifyArgs& args) {
  if (args.cases < 1) throw CliFailure{kBadArguments, "--cases must be at least 1"};
  std::vector<causal::SuiteReport> reports;
  const bool all = args.suite == "all";
  if (all || args.suite == "pdm") reports.push_back(causal::run_pdm_suite(args.seed, args.cases));
  if (all || args.suite == "lemmas") reports.push_back(causal::run_lemma_suite(args.seed, args.cases));
  if (all || args.suite == "fidelity") reports.push_back(causal::run_fidelity_suite(args.seed, args.cases));
  if (all || args.suite == "bounds") reports.push_back(causal::run_bounds_suite(args.seed, args.cases));

  bool ok = true;
  for (const auto& rep : reports) {
    int passed = 0;
    for (const auto& check : rep.checks) {
      char line[256];
      std::snprintf(line, sizeof line, "  %-40s %s %d/%d  worst=%.3e  tol=%.0e", check.name.c_str(),
                    check.passed() ? "PASS" : "FAIL", check.cases - check.failures, check.cases, check.worst,
                    check.tolerance);
      std::cout << line << '\n';
      passed += check.passed() ? 1 : 0;
    }
    std::cout << "suite " << rep.suite << ": " << (rep.passed() ? "PASS" : "FAIL") << " (" << passed << "/"
              << rep.checks.size() << " checks)\n";
    ok = ok && rep.passed();
  }
  return ok ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------------------
// channel-info

int run_channel_info(const ChannelArgs& args) {
  const QuantumChannel c = resolve_channel(args);
  const auto spectrum = causal::eigenvalues(c.choi());
  std::vector<double> descending(spectrum.rbegin(), spectrum.rend());
  json j;
  j["label"] = c.label();
  j["qubits_in"] = c.qubits_in();
  j["qubits_out"] = c.qubits_out();
  j["kraus_rank"] = c.kraus().size();
  j["choi_spectrum"] = descending;
  j["tp_residual"] = causal::completeness_residual(c.kraus());
  j["cp_residual"] = std::max(0.0, -spectrum.front());
  std::cout << j.dump() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum capacity upper bounds from the causality measure of a channel"};
  app.require_subcommand(1);

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Compute capacity bounds for one channel (JSON lines)");
  add_channel_options(bound_cmd, bound.channel);
  bound_cmd->add_option("--method", bound.method, "causality|hw|analytic|maxrains|all")
      ->check(CLI::IsMember({"causality", "hw", "analytic", "maxrains", "all"}));
  bound_cmd->add_option("--seed", bound.seed, "Optimizer seed");
  bound_cmd->add_option("--restarts", bound.restarts, "Optimizer restarts")->check(CLI::PositiveNumber);
  bound_cmd->add_option("--max-iters", bound.max_iters, "Iterations per restart")->check(CLI::PositiveNumber);

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Shifted depolarizing (p, gamma) grid to CSV");
  sweep_cmd->add_option("--p-min", sweep.p_min);
  sweep_cmd->add_option("--p-max", sweep.p_max);
  sweep_cmd->add_option("--p-steps", sweep.p_steps)->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--gamma-min", sweep.gamma_min);
  sweep_cmd->add_option("--gamma-max", sweep.gamma_max);
  sweep_cmd->add_option("--gamma-steps", sweep.gamma_steps)->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--out", sweep.out, "CSV output path")->required();
  sweep_cmd->add_option("--seed", sweep.seed, "Optimizer seed");
  sweep_cmd->add_option("--restarts", sweep.restarts, "Optimizer restarts")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--max-iters", sweep.max_iters, "Iterations per restart")->check(CLI::PositiveNumber);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run randomized property suites");
  verify_cmd->add_option("--suite", verify.suite, "all|pdm|lemmas|fidelity|bounds")
      ->check(CLI::IsMember({"all", "pdm", "lemmas", "fidelity", "bounds"}));
  verify_cmd->add_option("--cases", verify.cases, "Random cases per check");
  verify_cmd->add_option("--seed", verify.seed, "Suite seed");

  ChannelArgs info;
  auto* info_cmd = app.add_subcommand("channel-info", "Describe a channel (JSON)");
  add_channel_options(info_cmd, info);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadArguments;
  }

  try {
    if (*bound_cmd) return run_bound(bound);
    if (*sweep_cmd) return run_sweep(sweep);
    if (*verify_cmd) return run_verify(verify);
    if (*info_cmd) return run_channel_info(info);
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  } catch (const causal::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadArguments;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kBadArguments;
}
