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

// Estimation of the weight angles theta_a, theta_b from the teleported
// states: Fisher information on either side, closed-form matrices, and
// Cramer-Rao variance bounds.

#include <string_view>

#include <Eigen/Dense>

#include "bqt/bloch.hpp"
#include "bqt/grid.hpp"
#include "bqt/protocol.hpp"

namespace bqt {

/// Bloch vector of the state one side holds after the protocol, as a function
/// of all six protocol angles. Bob holds w_ab n(theta_a, phi_a); Alice holds
/// w_ba n(theta_b, phi_b).
class ParamBlochCurve {
 public:
  explicit ParamBlochCurve(Side side, ProbModel model = ProbModel::Overlap)
      : side_(side), model_(model) {}

  Side side() const { return side_; }
  ProbModel model() const { return model_; }

  double weight(const ProtocolParams& p) const;
  BlochVector value(const ProtocolParams& p) const;
  /// Analytic partial derivative; zero through clamped probabilities.
  BlochVector partial(const ProtocolParams& p, Param wrt) const;

  DensityMatrix2 density(const ProtocolParams& p) const;
  DensityMatrix2 density_partial(const ProtocolParams& p, Param wrt) const;

 private:
  Side side_;
  ProbModel model_;
};

/// Bloch-form QFIM entry for parameters (i, j) of the curve.
double qfim_bloch(const ParamBlochCurve& curve, const ProtocolParams& p,
                  Param i, Param j);

/// 2x2 QFIM over (theta_a, theta_b).
Eigen::Matrix2d qfim_bloch_matrix(const ParamBlochCurve& curve,
                                  const ProtocolParams& p);

/// Probabilities and the only derivatives the closed forms need.
struct ProbabilityJet {
  double pa = 0.0;
  double pb = 0.0;
  double dpa = 0.0;  // d p_a / d theta_a
  double dpb = 0.0;  // d p_b / d theta_b
};

ProbabilityJet jet_at(const ProtocolParams& p, ProbModel model = ProbModel::Overlap);

struct ClosedQfim {
  Eigen::Matrix2d matrix = Eigen::Matrix2d::Zero();  // over (theta_a, theta_b)
  bool singular = false;  // weight^2 within kPureBranchBand of 1
};

/// The printed Alice-side matrix with w = p_b (1 - p_a):
///   1/(1 - w^2) [[(p_b dpbar_a)^2, w dp_b dpbar_a],
///                [w dp_b dpbar_a, w^2 (1 - w^2) + (pbar_a dp_b)^2]].
/// Near w = 1 the pure-state limit (no 1/(1 - w^2)) is returned and flagged.
ClosedQfim qfim_alice_closed(double pa, double pb, double dpa_dtheta_a,
                             double dpb_dtheta_b);

/// Mirror image of qfim_alice_closed under a <-> b, still indexed
/// (theta_a, theta_b).
ClosedQfim qfim_bob_closed(double pa, double pb, double dpa_dtheta_a,
                           double dpb_dtheta_b);

/// Fisher information on theta_a held by Bob and on theta_b held by Alice:
/// the corresponding diagonal entries of the closed-form matrices.
double fisher_theta_a(const ProbabilityJet& j);
double fisher_theta_b(const ProbabilityJet& j);

/// A variance bound or ratio. Division by zero is never silent.
struct Bound {
  enum class Status { Finite, Infinite, Undefined };
  double value = 0.0;
  Status status = Status::Finite;

  bool finite() const { return status == Status::Finite; }
  /// value, +inf or NaN.
  double as_double() const;

  static Bound ratio(double num, double den);
};

std::string_view to_string(Bound::Status s);

struct VarianceReport {
  Bound var_ind_a;  // 1 / F_theta_a
  Bound var_ind_b;  // 1 / F_theta_b
  /// The printed theta_a bound, whose gradient term is (pbar_a dp_a)^2 where
  /// F_theta_a has (pbar_b dp_a)^2. The theta_b bound matches 1 / F_theta_b.
  Bound var_ind_a_printed;
  /// 1 / (p_a pbar_b)^2: the printed theta_a expression with the common
  /// (d pbar_b / d theta_b)^2 factor cancelled.
  Bound var_sim_a;
  /// 1 / (p_b pbar_a)^2, the a <-> b mirror of var_sim_a.
  Bound var_sim_b;
  /// The printed expressions evaluated without cancellation. The theta_b
  /// numerator differentiates pbar_a by theta_b, which is identically zero.
  Bound var_sim_a_printed;
  Bound var_sim_b_printed;
  /// Diagonal of the inverse closed-form matrices: (F_bob^-1)_aa and
  /// (F_alice^-1)_bb.
  Bound inverse_qfim_aa;
  Bound inverse_qfim_bb;
  Bound delta_alice;  // var_ind_a / var_sim_a
  Bound delta_bob;    // var_ind_b / var_sim_b
};

VarianceReport variance_bounds(const ProbabilityJet& j);

/// QFI_theta_a or QFI_theta_b of the state held by config.side.
SweepResult qfi_surface(const SweepConfig& config);

/// Delta (theta_a) or delta (theta_b) over the grid; undefined ratios become
/// NaN and are reported in the diagnostics together with any value outside
/// [0, 1].
SweepResult ratio_surface(const SweepConfig& config);

}  // namespace bqt
