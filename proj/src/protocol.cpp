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

#include "bqt/protocol.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bqt {

std::string_view to_string(ProbModel model) {
  switch (model) {
    case ProbModel::Overlap:
      return "overlap";
    case ProbModel::PhaseSum:
      return "phase-sum";
  }
  return "?";
}

ProbModel parse_prob_model(std::string_view name) {
  if (name == "overlap") return ProbModel::Overlap;
  if (name == "phase-sum") return ProbModel::PhaseSum;
  throw std::invalid_argument("unknown probability model '" +
                              std::string(name) +
                              "' (expected overlap or phase-sum)");
}

std::string_view to_string(TriggerCase c) {
  switch (c) {
    case TriggerCase::BothPlusZ:
      return "both-plus-z";
    case TriggerCase::BothMinusZ:
      return "both-minus-z";
    case TriggerCase::AliceMinusBobPlus:
      return "alice-minus-bob-plus";
    case TriggerCase::BobMinusAlicePlus:
      return "bob-minus-alice-plus";
    case TriggerCase::General:
      return "general";
  }
  return "?";
}

std::string_view to_string(Param p) {
  switch (p) {
    case Param::ThetaA:
      return "theta_a";
    case Param::ThetaB:
      return "theta_b";
    case Param::PhiA:
      return "phi_a";
    case Param::PhiB:
      return "phi_b";
    case Param::TriggerA:
      return "theta_t_a";
    case Param::TriggerB:
      return "theta_t_b";
  }
  return "?";
}

namespace {

// Coefficient multiplying sin(t) sin(theta) in p.
double phase_factor(double phi, ProbModel model) {
  return model == ProbModel::Overlap ? std::cos(phi)
                                     : std::cos(phi) + std::sin(phi);
}

double phase_factor_derivative(double phi, ProbModel model) {
  return model == ProbModel::Overlap ? -std::sin(phi)
                                     : std::cos(phi) - std::sin(phi);
}

}  // namespace

OverlapProb overlap_prob(const PureQubit& q, const TriggerSpec& t,
                         ProbModel model) {
  const double th = q.theta.radians();
  const double tt = t.theta.radians();
  const double raw =
      0.5 * (1.0 + std::cos(tt) * std::cos(th) +
             std::sin(tt) * std::sin(th) * phase_factor(q.phi.radians(), model));
  OverlapProb out;
  out.raw = raw;
  out.value = std::clamp(raw, 0.0, 1.0);
  // The overlap model only leaves [0, 1] through rounding.
  out.clamped = model == ProbModel::PhaseSum && (raw < 0.0 || raw > 1.0);
  return out;
}

ProbGradient overlap_prob_gradient(const PureQubit& q, const TriggerSpec& t,
                                   ProbModel model) {
  if (overlap_prob(q, t, model).clamped) return {};
  const double th = q.theta.radians();
  const double ph = q.phi.radians();
  const double tt = t.theta.radians();
  const double c = phase_factor(ph, model);
  ProbGradient g;
  g.d_theta = 0.5 * (-std::cos(tt) * std::sin(th) +
                     std::sin(tt) * std::cos(th) * c);
  g.d_phi = 0.5 * std::sin(tt) * std::sin(th) *
            phase_factor_derivative(ph, model);
  g.d_trigger = 0.5 * (-std::sin(tt) * std::cos(th) +
                       std::cos(tt) * std::sin(th) * c);
  return g;
}

namespace {

// 0 or pi (mod 2 pi) within tolerance, else -1.
int pole_of(const TriggerSpec& t) {
  const double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(t.theta.radians(), two_pi);
  if (r < 0) r += two_pi;
  if (r < kTriggerMatchTol || two_pi - r < kTriggerMatchTol) return 0;
  if (std::abs(r - std::numbers::pi) < kTriggerMatchTol) return 1;
  return -1;
}

}  // namespace

TriggerCase classify_triggers(const TriggerSpec& ta, const TriggerSpec& tb) {
  const int a = pole_of(ta);
  const int b = pole_of(tb);
  if (a == 0 && b == 0) return TriggerCase::BothPlusZ;
  if (a == 1 && b == 1) return TriggerCase::BothMinusZ;
  if (a == 1 && b == 0) return TriggerCase::AliceMinusBobPlus;
  if (a == 0 && b == 1) return TriggerCase::BobMinusAlicePlus;
  return TriggerCase::General;
}

TeleportOutcome teleported_states(const PureQubit& qa, const PureQubit& qb,
                                  const TriggerSpec& ta, const TriggerSpec& tb,
                                  ProbModel model) {
  const OverlapProb pa = overlap_prob(qa, ta, model);
  const OverlapProb pb = overlap_prob(qb, tb, model);
  TeleportOutcome out;
  out.weight_ab = pa.value * (1.0 - pb.value);
  out.weight_ba = pb.value * (1.0 - pa.value);
  out.rho_at_bob = bloch_to_density(teleported_bloch(qa, out.weight_ab));
  out.rho_at_alice = bloch_to_density(teleported_bloch(qb, out.weight_ba));
  out.clamped = pa.clamped || pb.clamped;
  return out;
}

TeleportOutcome teleported_states(const ProtocolParams& p, ProbModel model) {
  return teleported_states(p.qa(), p.qb(), p.ta(), p.tb(), model);
}

BlochVector teleported_bloch(const PureQubit& q, double weight) {
  if (!(weight >= 0.0 && weight <= 1.0)) {
    throw std::domain_error("teleported_bloch: weight " +
                            std::to_string(weight) + " outside [0, 1]");
  }
  return weight * pure_to_bloch(q);
}

ProtocolParams ProtocolParams::from(const PureQubit& qa, const PureQubit& qb,
                                    const TriggerSpec& ta,
                                    const TriggerSpec& tb) {
  ProtocolParams p;
  p[Param::ThetaA] = qa.theta.radians();
  p[Param::ThetaB] = qb.theta.radians();
  p[Param::PhiA] = qa.phi.radians();
  p[Param::PhiB] = qb.phi.radians();
  p[Param::TriggerA] = ta.theta.radians();
  p[Param::TriggerB] = tb.theta.radians();
  return p;
}

}  // namespace bqt
