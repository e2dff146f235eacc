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

#pragma once

// Random-trial comparison of the circuit simulation against the closed-form
// teleported states.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bqt/circuit.hpp"
#include "bqt/protocol.hpp"

namespace bqt {

enum class PhaseMode { Zero, Full };

std::string_view to_string(PhaseMode m);
PhaseMode parse_phase_mode(std::string_view name);

struct VerifyOptions {
  int trials = 100;
  std::uint64_t seed = 42;
  PhaseMode phase_mode = PhaseMode::Zero;
  ProbModel model = ProbModel::Overlap;
  OracleOptions oracle;
  /// Full mode only: use this phase for both qubits instead of a random one.
  std::optional<double> fixed_phase;
  double threshold = 1e-9;
  bool keep_branches = false;
};

struct TrialRecord {
  ProtocolParams inputs;
  TeleportOutcome analytic;
  OracleOutcome oracle;
  double distance_alice = 0.0;
  double distance_bob = 0.0;
  double distance = 0.0;   // max of the two
  /// Trace distance between the phase-sum and overlap closed forms.
  double model_gap = 0.0;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<TrialRecord> trials;
  double max_distance = 0.0;
  int worst_trial = -1;
  double max_model_gap = 0.0;
  int failures = 0;   // trials at or above the threshold
  bool passed = false;
  /// Zero mode gates on `passed`; full mode only reports.
  bool gating = true;
};

/// Throws std::invalid_argument for trials < 1.
VerifyReport run_verify(const VerifyOptions& options);

/// Compares oracle and closed form on one explicit configuration.
TrialRecord verify_one(const ProtocolParams& p, ProbModel model,
                       const OracleOptions& oracle);

nlohmann::ordered_json to_json(const VerifyReport& report);

/// Human-readable summary, one line per trial plus a verdict.
std::string summarize(const VerifyReport& report);

}  // namespace bqt
