// Copyright 2026 The bqt Authors
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

// bqt: figure grids, oracle verification and the discrepancy ledger.
//
// Exit codes: 0 success, 1 usage or config error, 2 verification failure,
// 3 I/O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bqt/ledger.hpp"
#include "bqt/sweep.hpp"
#include "bqt/verify.hpp"

namespace {

constexpr int kUsage = 1;
constexpr int kVerifyFailed = 2;
constexpr int kIo = 3;

int cmd_sweep(const std::string& config_arg, const std::string& out_path) {
  const bqt::SweepConfig config = bqt::load_config(config_arg);
  const bqt::SweepResult result = bqt::run_sweep(config);
  if (out_path.empty() || out_path == "-") {
    bqt::write_csv(result, std::cout);
  } else {
    bqt::write_csv_file(result, out_path);
    std::cerr << "wrote " << result.grid.rows << "x" << result.grid.cols << " grid to "
              << out_path << " (max " << bqt::format_number(result.extrema.max)
              << ", min " << bqt::format_number(result.extrema.min) << ")\n";
  }
  return 0;
}

struct VerifyArgs {
  int trials = 100;
  std::uint64_t seed = 42;
  std::string phase_mode = "zero";
  std::string model = "overlap";
  std::string circuit = "literal";
  std::optional<double> phase;
  std::string report = "text";
  std::string out;
  bool branches = false;
};

int cmd_verify(const VerifyArgs& a) {
  bqt::VerifyOptions o;
  o.trials = a.trials;
  o.seed = a.seed;
  o.phase_mode = bqt::parse_phase_mode(a.phase_mode);
  o.model = bqt::parse_prob_model(a.model);
  o.oracle.variant = bqt::parse_circuit_variant(a.circuit);
  o.fixed_phase = a.phase;
  o.keep_branches = a.branches;
  if (o.fixed_phase && o.phase_mode != bqt::PhaseMode::Full) {
    throw std::invalid_argument("--phase requires --phase-mode full");
  }
  const bqt::VerifyReport r = bqt::run_verify(o);

  std::string text;
  if (a.report == "json") {
    nlohmann::ordered_json j = bqt::to_json(r);
    nlohmann::ordered_json ledger = nlohmann::ordered_json::array();
    for (const bqt::LedgerEntry& e : bqt::ledger_entries()) {
      ledger.push_back({{"id", e.id}, {"title", e.title}, {"findings", e.findings},
                        {"lines", e.lines}});
    }
    j["ledger"] = ledger;
    text = j.dump(2) + "\n";
  } else if (a.report == "text") {
    text = bqt::summarize(r);
  } else {
    throw std::invalid_argument("unknown report format '" + a.report +
                                "' (expected text or json)");
  }
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(a.out, std::ios::binary);
    if (!(f << text)) throw std::ios_base::failure("cannot write '" + a.out + "'");
    std::cout << (r.passed ? "PASS" : "FAIL") << ": max trace distance "
              << bqt::format_number(r.max_distance) << "\n";
  }
  return (r.gating && !r.passed) ? kVerifyFailed : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bidirectional teleportation: fidelity, Fisher information and "
               "circuit verification"};
  app.require_subcommand(1);

  std::string config_arg;
  std::string out_path;
  auto* sweep = app.add_subcommand("sweep", "Evaluate a parameter grid to CSV");
  sweep->add_option("--config", config_arg, "Config file or preset name")->required();
  sweep->add_option("--out", out_path, "Output CSV path (default stdout)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Compare the circuit with the closed form");
  verify->add_option("--trials", va.trials, "Number of random trials")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", va.seed, "Generator seed (mt19937_64)");
  verify->add_option("--phase-mode", va.phase_mode, "zero or full")
      ->check(CLI::IsMember({"zero", "full"}));
  verify->add_option("--prob-model", va.model, "overlap or phase-sum")
      ->check(CLI::IsMember({"overlap", "phase-sum"}));
  verify->add_option("--circuit", va.circuit, "literal or trigger-controlled")
      ->check(CLI::IsMember({"literal", "trigger-controlled", "controlled"}));
  verify->add_option("--phase", va.phase, "Fixed phase for both qubits (full mode)");
  verify->add_option("--report", va.report, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", va.out, "Write the report here");
  verify->add_flag("--branches", va.branches, "Keep per-branch records in the report");

  auto* ledger = app.add_subcommand("ledger", "Print computed-vs-reference findings");
  auto* presets = app.add_subcommand("preset-list", "List the named sweep presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*sweep) return cmd_sweep(config_arg, out_path);
    if (*verify) return cmd_verify(va);
    if (*ledger) {
      std::cout << bqt::ledger_report();
      return 0;
    }
    if (*presets) {
      for (const std::string& name : bqt::preset_names()) {
        const bqt::SweepConfig c = *bqt::preset(name);
        std::cout << name << "  " << bqt::to_string(c.quantity) << " over "
                  << bqt::to_string(c.axis1.param) << " x "
                  << bqt::to_string(c.axis2.param) << "\n";
      }
      return 0;
    }
  } catch (const bqt::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
