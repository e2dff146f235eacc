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

// Closed-form bidirectional teleportation over one Bell pair with trigger
// qubits. Each party succeeds with probability p (overlap of data qubit and
// trigger); the state delivered to the receiver is the depolarized mixture
//
//     rho_at_bob   = p_a (1 - p_b) rho_a + (1 - p_a (1 - p_b)) I/2
//     rho_at_alice = p_b (1 - p_a) rho_b + (1 - p_b (1 - p_a)) I/2

#include <array>
#include <string_view>

#include "bqt/bloch.hpp"

namespace bqt {

/// How the success probability p of one party is evaluated.
enum class ProbModel {
  /// p = tr(rho_T rho_q) = 1/2 (1 + cos t cos th + sin t sin th cos ph).
  Overlap,
  /// p = 1/2 (1 + cos t cos th + sin t sin th (cos ph + sin ph)).
  /// The trigger vector (sin t, sin t, cos t) is not normalized, so the raw
  /// value can leave [0, 1]; it is clamped and the event reported.
  PhaseSum,
};

std::string_view to_string(ProbModel model);
/// Accepts "overlap" and "phase-sum"; throws std::invalid_argument otherwise.
ProbModel parse_prob_model(std::string_view name);

enum class TriggerCase {
  BothPlusZ,
  BothMinusZ,
  AliceMinusBobPlus,
  BobMinusAlicePlus,
  General,
};

std::string_view to_string(TriggerCase c);

struct OverlapProb {
  double value = 0.0;  // in [0, 1]
  double raw = 0.0;    // before clamping
  bool clamped = false;
};

/// Partial derivatives of p with respect to the qubit angles and the trigger
/// angle. All zero where the value is clamped.
struct ProbGradient {
  double d_theta = 0.0;
  double d_phi = 0.0;
  double d_trigger = 0.0;
};

OverlapProb overlap_prob(const PureQubit& q, const TriggerSpec& t,
                         ProbModel model);
ProbGradient overlap_prob_gradient(const PureQubit& q, const TriggerSpec& t,
                                   ProbModel model);

/// Angle matching is modulo 2 pi with tolerance kTriggerMatchTol.
inline constexpr double kTriggerMatchTol = 1e-9;
TriggerCase classify_triggers(const TriggerSpec& ta, const TriggerSpec& tb);

struct TeleportOutcome {
  DensityMatrix2 rho_at_alice;
  DensityMatrix2 rho_at_bob;
  double weight_ab = 0.0;  // p_a (1 - p_b): weight of rho_a at Bob
  double weight_ba = 0.0;  // p_b (1 - p_a): weight of rho_b at Alice
  bool clamped = false;    // either probability was clamped
};

TeleportOutcome teleported_states(const PureQubit& qa, const PureQubit& qb,
                                  const TriggerSpec& ta, const TriggerSpec& tb,
                                  ProbModel model = ProbModel::Overlap);

/// weight * pure_to_bloch(q). Throws std::domain_error unless weight is in
/// [0, 1].
BlochVector teleported_bloch(const PureQubit& q, double weight);

/// The six protocol angles as one value, addressable by Param.
enum class Param { ThetaA, ThetaB, PhiA, PhiB, TriggerA, TriggerB };
inline constexpr std::array<Param, 6> kAllParams = {
    Param::ThetaA, Param::ThetaB, Param::PhiA,
    Param::PhiB,   Param::TriggerA, Param::TriggerB};

std::string_view to_string(Param p);

struct ProtocolParams {
  std::array<double, 6> values{};

  double& operator[](Param p) { return values[static_cast<int>(p)]; }
  double operator[](Param p) const { return values[static_cast<int>(p)]; }

  PureQubit qa() const { return PureQubit((*this)[Param::ThetaA], (*this)[Param::PhiA]); }
  PureQubit qb() const { return PureQubit((*this)[Param::ThetaB], (*this)[Param::PhiB]); }
  TriggerSpec ta() const { return TriggerSpec((*this)[Param::TriggerA]); }
  TriggerSpec tb() const { return TriggerSpec((*this)[Param::TriggerB]); }

  static ProtocolParams from(const PureQubit& qa, const PureQubit& qb,
                             const TriggerSpec& ta, const TriggerSpec& tb);
};

TeleportOutcome teleported_states(const ProtocolParams& p,
                                  ProbModel model = ProbModel::Overlap);

}  // namespace bqt
