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

#include "bqt/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>

#include "bqt/sweep.hpp"

namespace bqt {

std::string_view to_string(PhaseMode m) {
  return m == PhaseMode::Zero ? "zero" : "full";
}

PhaseMode parse_phase_mode(std::string_view name) {
  if (name == "zero") return PhaseMode::Zero;
  if (name == "full") return PhaseMode::Full;
  throw std::invalid_argument("unknown phase mode '" + std::string(name) +
                              "' (expected zero or full)");
}

TrialRecord verify_one(const ProtocolParams& p, ProbModel model,
                       const OracleOptions& oracle) {
  TrialRecord t;
  t.inputs = p;
  t.analytic = teleported_states(p, model);
  t.oracle = run_protocol_detailed(p.qa(), p.qb(), p.ta(), p.tb(), oracle);
  t.distance_alice =
      trace_distance(t.analytic.rho_at_alice, t.oracle.outcome.rho_at_alice);
  t.distance_bob = trace_distance(t.analytic.rho_at_bob, t.oracle.outcome.rho_at_bob);
  t.distance = std::max(t.distance_alice, t.distance_bob);
  const TeleportOutcome other = teleported_states(
      p, model == ProbModel::Overlap ? ProbModel::PhaseSum : ProbModel::Overlap);
  t.model_gap = std::max(trace_distance(t.analytic.rho_at_alice, other.rho_at_alice),
                         trace_distance(t.analytic.rho_at_bob, other.rho_at_bob));
  return t;
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.trials < 1) {
    throw std::invalid_argument("verify: trials must be >= 1");
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> polar(0.0, std::numbers::pi);
  std::uniform_real_distribution<double> azimuth(0.0, 2.0 * std::numbers::pi);

  VerifyReport r;
  r.options = options;
  r.gating = options.phase_mode == PhaseMode::Zero;
  for (int i = 0; i < options.trials; ++i) {
    ProtocolParams p;
    p[Param::ThetaA] = polar(rng);
    p[Param::ThetaB] = polar(rng);
    p[Param::TriggerA] = polar(rng);
    p[Param::TriggerB] = polar(rng);
    if (options.phase_mode == PhaseMode::Full) {
      if (options.fixed_phase) {
        p[Param::PhiA] = p[Param::PhiB] = *options.fixed_phase;
      } else {
        p[Param::PhiA] = azimuth(rng);
        p[Param::PhiB] = azimuth(rng);
      }
    }
    TrialRecord t = verify_one(p, options.model, options.oracle);
    if (!options.keep_branches) t.oracle.branches.clear();
    if (t.distance > r.max_distance || r.worst_trial < 0) {
      r.max_distance = t.distance;
      r.worst_trial = i;
    }
    r.max_model_gap = std::max(r.max_model_gap, t.model_gap);
    if (!(t.distance < options.threshold)) ++r.failures;
    r.trials.push_back(std::move(t));
  }
  r.passed = r.failures == 0;
  return r;
}

namespace {

nlohmann::ordered_json bloch_json(const BlochVector& s) {
  return {s(0), s(1), s(2)};
}

nlohmann::ordered_json density_bloch_json(const DensityMatrix2& rho) {
  return bloch_json(density_to_bloch(rho));
}

}  // namespace

nlohmann::ordered_json to_json(const VerifyReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["options"] = {
      {"trials", r.options.trials},
      {"seed", r.options.seed},
      {"phase_mode", to_string(r.options.phase_mode)},
      {"prob_model", to_string(r.options.model)},
      {"circuit", to_string(r.options.oracle.variant)},
      {"correction", to_string(r.options.oracle.correction)},
      {"threshold", r.options.threshold},
  };
  if (r.options.fixed_phase) j["options"]["fixed_phase"] = *r.options.fixed_phase;

  ordered_json trials = ordered_json::array();
  for (const TrialRecord& t : r.trials) {
    ordered_json in;
    for (Param p : kAllParams) in[std::string(to_string(p))] = t.inputs[p];
    ordered_json rec = {
        {"inputs", in},
        {"analytic",
         {{"weight_ab", t.analytic.weight_ab},
          {"weight_ba", t.analytic.weight_ba},
          {"bloch_at_alice", density_bloch_json(t.analytic.rho_at_alice)},
          {"bloch_at_bob", density_bloch_json(t.analytic.rho_at_bob)},
          {"clamped", t.analytic.clamped}}},
        {"oracle",
         {{"fitted_weight_ab", t.oracle.fitted_weight_ab},
          {"fitted_weight_ba", t.oracle.fitted_weight_ba},
          {"fit_residual_alice", t.oracle.fit_residual_alice},
          {"fit_residual_bob", t.oracle.fit_residual_bob},
          {"total_probability", t.oracle.total_probability},
          {"bloch_at_alice", density_bloch_json(t.oracle.outcome.rho_at_alice)},
          {"bloch_at_bob", density_bloch_json(t.oracle.outcome.rho_at_bob)}}},
        {"trace_distance_alice", t.distance_alice},
        {"trace_distance_bob", t.distance_bob},
        {"trace_distance", t.distance},
        {"model_gap", t.model_gap},
    };
    if (!t.oracle.branches.empty()) {
      ordered_json branches = ordered_json::array();
      for (const MeasurementRecord& b : t.oracle.branches) {
        branches.push_back({{"bits", b.bits},
                            {"probability", b.probability},
                            {"bloch_at_alice", bloch_json(b.alice)},
                            {"bloch_at_bob", bloch_json(b.bob)}});
      }
      rec["oracle"]["branches"] = branches;
    }
    trials.push_back(rec);
  }
  j["trials"] = trials;
  j["summary"] = {
      {"max_trace_distance", r.max_distance},
      {"worst_trial", r.worst_trial},
      {"failures", r.failures},
      {"max_model_gap", r.max_model_gap},
      {"passed", r.passed},
      {"gating", r.gating},
  };
  return j;
}

std::string summarize(const VerifyReport& r) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "verify: %d trials, seed %llu, phase %s, model %s, circuit %s, "
                "correction %s\n",
                r.options.trials, static_cast<unsigned long long>(r.options.seed),
                std::string(to_string(r.options.phase_mode)).c_str(),
                std::string(to_string(r.options.model)).c_str(),
                std::string(to_string(r.options.oracle.variant)).c_str(),
                std::string(to_string(r.options.oracle.correction)).c_str());
  out += buf;
  for (std::size_t i = 0; i < r.trials.size(); ++i) {
    const TrialRecord& t = r.trials[i];
    std::snprintf(buf, sizeof buf,
                  "trial %3zu  D=%s  w_ab=%s fit=%s  w_ba=%s fit=%s  gap=%s\n", i,
                  format_number(t.distance).c_str(),
                  format_number(t.analytic.weight_ab).c_str(),
                  format_number(t.oracle.fitted_weight_ab).c_str(),
                  format_number(t.analytic.weight_ba).c_str(),
                  format_number(t.oracle.fitted_weight_ba).c_str(),
                  format_number(t.model_gap).c_str());
    out += buf;
  }
  std::snprintf(buf, sizeof buf,
                "max trace distance %s (trial %d), %d of %d at or above %s; "
                "max model gap %s\n",
                format_number(r.max_distance).c_str(), r.worst_trial, r.failures,
                r.options.trials, format_number(r.options.threshold).c_str(),
                format_number(r.max_model_gap).c_str());
  out += buf;
  out += r.passed ? "PASS" : "FAIL";
  out += r.gating ? "\n" : " (report only)\n";
  return out;
}

}  // namespace bqt
