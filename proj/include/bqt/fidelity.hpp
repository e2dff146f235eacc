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

// Teleportation fidelities: pointwise, per direction, and averaged over the
// Bloch sphere of input states.

#include <functional>
#include <vector>

#include "bqt/bloch.hpp"
#include "bqt/grid.hpp"
#include "bqt/protocol.hpp"

namespace bqt {

enum class Direction { AliceToBob, BobToAlice };

/// Output = A1 |t><t| + A2 I, i.e. a depolarized copy with weight A1.
struct FidelityParams {
  double a1 = 0.0;
  double a2 = 0.5;
  Direction direction = Direction::AliceToBob;

  /// Throws std::domain_error unless w lies in [0, 1].
  static FidelityParams from_weight(double w, Direction d);
  /// A1 = p_sender (1 - p_receiver) for the given direction.
  static FidelityParams from_probabilities(double pa, double pb, Direction d);
};

/// <initial| A1 |t><t| + A2 I |initial>, expanded in the amplitudes
/// c = cos(theta/2), s = e^{i phi} sin(theta/2) of both states.
double point_fidelity(const PureQubit& initial, const PureQubit& teleported,
                      const FidelityParams& params);

/// 1/2 (1 + p_sender (1 - p_receiver)). Throws std::domain_error for
/// probabilities outside [0, 1].
double direction_fidelity(double p_sender, double p_receiver);

struct IntegrationSpec {
  int theta_nodes = 64;
  int phi_nodes = 64;
  double tolerance = 1e-6;  // allowed change when both resolutions double
};

inline constexpr int kMinQuadratureNodes = 16;

struct QuadratureResult {
  double value = 0.0;             // at the doubled resolution
  double refinement_delta = 0.0;  // |doubled - requested|
};

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights);

/// 1/(4 pi) \int_0^pi \int_0^2pi f(theta, phi) sin(theta) dphi dtheta.
/// Gauss-Legendre in theta, trapezoid in phi. Throws std::invalid_argument
/// for fewer than kMinQuadratureNodes per dimension and std::runtime_error
/// when doubling the resolution moves the result by more than the tolerance.
QuadratureResult sphere_average(
    const std::function<double(double theta, double phi)>& f,
    const IntegrationSpec& spec = {});

/// Average of a pointwise fidelity over all pure input states.
QuadratureResult averaged_fidelity(
    const std::function<double(const PureQubit&)>& fidelity_of_input,
    const IntegrationSpec& spec = {});

/// Direction fidelity averaged over the sender's input state, with the
/// triggers and the receiver's qubit taken from p.
QuadratureResult averaged_direction_fidelity(const ProtocolParams& p,
                                             Direction d, ProbModel model,
                                             const IntegrationSpec& spec = {});

double direction_fidelity_at(const ProtocolParams& p, Direction d,
                             ProbModel model);

/// FidelityAB, FidelityBA or AvgFidelity over the configured grid.
/// AvgFidelity uses the direction whose receiver is config.side.
SweepResult fidelity_surface(const SweepConfig& config);

}  // namespace bqt
