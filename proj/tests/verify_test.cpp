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

#include <algorithm>
#include <numbers>

#include <gtest/gtest.h>

#include "bqt/ledger.hpp"
#include "bqt/pauli.hpp"
#include "bqt/verify.hpp"

namespace bqt {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(RunVerify, SeededRunsAreIdentical) {
  VerifyOptions o;
  o.trials = 5;
  const VerifyReport a = run_verify(o), b = run_verify(o);
  ASSERT_EQ(a.trials.size(), 5u);
  for (std::size_t i = 0; i < a.trials.size(); ++i) {
    EXPECT_EQ(a.trials[i].inputs.values, b.trials[i].inputs.values);
    EXPECT_EQ(a.trials[i].distance, b.trials[i].distance);
  }
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  EXPECT_EQ(summarize(a), summarize(b));
  o.seed = 43;
  EXPECT_NE(run_verify(o).trials[0].inputs.values, a.trials[0].inputs.values);
}

TEST(RunVerify, ZeroPhaseDrawsNoPhases) {
  VerifyOptions o;
  o.trials = 20;
  for (const TrialRecord& t : run_verify(o).trials) {
    EXPECT_EQ(t.inputs[Param::PhiA], 0.0);
    EXPECT_EQ(t.inputs[Param::PhiB], 0.0);
    for (Param p : {Param::ThetaA, Param::ThetaB, Param::TriggerA, Param::TriggerB}) {
      EXPECT_GE(t.inputs[p], 0.0);
      EXPECT_LE(t.inputs[p], kPi);
    }
    EXPECT_EQ(t.model_gap, 0.0);
  }
}

TEST(RunVerify, RejectsNoTrials) {
  VerifyOptions o;
  o.trials = 0;
  EXPECT_THROW(run_verify(o), std::invalid_argument);
}

TEST(RunVerify, FailureAccounting) {
  VerifyOptions o;
  o.trials = 10;
  const VerifyReport r = run_verify(o);
  int failures = 0;
  double worst = 0.0;
  for (const TrialRecord& t : r.trials) {
    failures += t.distance >= o.threshold;
    worst = std::max(worst, t.distance);
    EXPECT_EQ(t.distance, std::max(t.distance_alice, t.distance_bob));
  }
  EXPECT_EQ(r.failures, failures);
  EXPECT_EQ(r.max_distance, worst);
  EXPECT_EQ(r.passed, failures == 0);
  EXPECT_TRUE(r.gating);
  EXPECT_EQ(summarize(r).substr(summarize(r).size() - 5), r.passed ? "PASS\n" : "FAIL\n");
}

// All-|0> qubits and triggers: p = 1 on both sides, so the closed form and the
// circuit both give the maximally mixed state.
TEST(VerifyOne, BothTriggersUpWithUpQubits) {
  for (CircuitVariant v : {CircuitVariant::Literal, CircuitVariant::TriggerControlled}) {
    const TrialRecord t = verify_one(ProtocolParams{}, ProbModel::Overlap, {v});
    EXPECT_LT(t.distance, 1e-10);
  }
}

TEST(RunVerify, FullPhaseRecordsModelGap) {
  VerifyOptions o;
  o.trials = 10;
  o.phase_mode = PhaseMode::Full;
  o.fixed_phase = kPi / 2;
  o.model = ProbModel::PhaseSum;
  const VerifyReport r = run_verify(o);
  EXPECT_FALSE(r.gating);
  EXPECT_GT(r.max_model_gap, 1e-3);
  for (const TrialRecord& t : r.trials) EXPECT_EQ(t.inputs[Param::PhiA], kPi / 2);
  EXPECT_NE(summarize(r).find("(report only)"), std::string::npos);
}

TEST(ToJson, Structure) {
  VerifyOptions o;
  o.trials = 2;
  o.keep_branches = true;
  const nlohmann::ordered_json j = to_json(run_verify(o));
  EXPECT_EQ(j["options"]["seed"], 42);
  EXPECT_EQ(j["trials"].size(), 2u);
  EXPECT_EQ(j["trials"][0]["oracle"]["branches"].size(), 16u);
  EXPECT_TRUE(j["summary"].contains("max_trace_distance"));
  EXPECT_EQ(j["trials"][0]["inputs"].size(), 6u);
}

TEST(PhaseModeNames, Parse) {
  EXPECT_EQ(parse_phase_mode("zero"), PhaseMode::Zero);
  EXPECT_EQ(parse_phase_mode("full"), PhaseMode::Full);
  EXPECT_THROW(parse_phase_mode("half"), std::invalid_argument);
}

TEST(Ledger, DeterministicAndComplete) {
  const std::string a = ledger_report();
  EXPECT_EQ(a, ledger_report());
  const std::vector<LedgerEntry> e = ledger_entries();
  std::vector<std::string> ids;
  for (const LedgerEntry& x : e) ids.push_back(x.id);
  for (const char* id : {"cnot-table", "ccnot-form", "prob-model", "case-1", "case-3",
                         "oracle", "fig2-extremum", "fig9-range", "closed-qfim"}) {
    EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
  }
  for (const LedgerEntry& x : e) {
    if (x.id == "ccnot-form") {
      EXPECT_GE(x.findings, 1);
      EXPECT_EQ(x.findings, int(ccnot_form_diffs().size()));
    }
    if (x.id == "cnot-table") EXPECT_EQ(x.findings, int(cnot_table_diffs().size()));
  }
  EXPECT_NE(a.find("[ccnot-form]"), std::string::npos);
}

}  // namespace
}  // namespace bqt
