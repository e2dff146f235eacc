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

#include "bqt/estimation.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "bqt/fisher.hpp"

namespace bqt {

namespace {

struct SideView {
  Param theta;
  Param phi;
  Param own_trigger;
  Param other_theta;
  Param other_phi;
  Param other_trigger;
};

// The sender is the party whose qubit the given side ends up holding.
SideView view_of(Side side) {
  if (side == Side::Bob) {
    return {Param::ThetaA, Param::PhiA, Param::TriggerA,
            Param::ThetaB, Param::PhiB, Param::TriggerB};
  }
  return {Param::ThetaB, Param::PhiB, Param::TriggerB,
          Param::ThetaA, Param::PhiA, Param::TriggerA};
}

PureQubit qubit(const ProtocolParams& p, Param th, Param ph) {
  return PureQubit(p[th], p[ph]);
}

}  // namespace

double ParamBlochCurve::weight(const ProtocolParams& p) const {
  const SideView v = view_of(side_);
  const double ps = overlap_prob(qubit(p, v.theta, v.phi),
                                 TriggerSpec(p[v.own_trigger]), model_).value;
  const double pr = overlap_prob(qubit(p, v.other_theta, v.other_phi),
                                 TriggerSpec(p[v.other_trigger]), model_).value;
  return ps * (1.0 - pr);
}

BlochVector ParamBlochCurve::value(const ProtocolParams& p) const {
  const SideView v = view_of(side_);
  return weight(p) * pure_to_bloch(qubit(p, v.theta, v.phi));
}

BlochVector ParamBlochCurve::partial(const ProtocolParams& p, Param wrt) const {
  const SideView v = view_of(side_);
  const PureQubit qs = qubit(p, v.theta, v.phi);
  const PureQubit qr = qubit(p, v.other_theta, v.other_phi);
  const TriggerSpec ts(p[v.own_trigger]);
  const TriggerSpec tr(p[v.other_trigger]);
  const double ps = overlap_prob(qs, ts, model_).value;
  const double pr = overlap_prob(qr, tr, model_).value;
  const ProbGradient gs = overlap_prob_gradient(qs, ts, model_);
  const ProbGradient gr = overlap_prob_gradient(qr, tr, model_);

  double dw = 0.0;
  if (wrt == v.theta) dw = gs.d_theta * (1.0 - pr);
  if (wrt == v.phi) dw = gs.d_phi * (1.0 - pr);
  if (wrt == v.own_trigger) dw = gs.d_trigger * (1.0 - pr);
  if (wrt == v.other_theta) dw = -ps * gr.d_theta;
  if (wrt == v.other_phi) dw = -ps * gr.d_phi;
  if (wrt == v.other_trigger) dw = -ps * gr.d_trigger;

  const double th = qs.theta.radians();
  const double ph = qs.phi.radians();
  BlochVector dn = BlochVector::Zero();
  if (wrt == v.theta) {
    dn << std::cos(th) * std::cos(ph), -std::cos(th) * std::sin(ph), -std::sin(th);
  } else if (wrt == v.phi) {
    dn << -std::sin(th) * std::sin(ph), -std::sin(th) * std::cos(ph), 0.0;
  }
  return dw * pure_to_bloch(qs) + ps * (1.0 - pr) * dn;
}

DensityMatrix2 ParamBlochCurve::density(const ProtocolParams& p) const {
  return bloch_to_density(value(p));
}

DensityMatrix2 ParamBlochCurve::density_partial(const ProtocolParams& p,
                                                Param wrt) const {
  return bloch_to_operator(partial(p, wrt), 0.0);
}

double qfim_bloch(const ParamBlochCurve& curve, const ProtocolParams& p,
                  Param i, Param j) {
  return qfim_bloch_entry<double>(curve.value(p), curve.partial(p, i),
                                  curve.partial(p, j));
}

Eigen::Matrix2d qfim_bloch_matrix(const ParamBlochCurve& curve,
                                  const ProtocolParams& p) {
  const BlochVector s = curve.value(p);
  const BlochVector da = curve.partial(p, Param::ThetaA);
  const BlochVector db = curve.partial(p, Param::ThetaB);
  Eigen::Matrix2d f;
  f(0, 0) = qfim_bloch_entry<double>(s, da, da);
  f(0, 1) = f(1, 0) = qfim_bloch_entry<double>(s, da, db);
  f(1, 1) = qfim_bloch_entry<double>(s, db, db);
  return f;
}

ProbabilityJet jet_at(const ProtocolParams& p, ProbModel model) {
  ProbabilityJet j;
  j.pa = overlap_prob(p.qa(), p.ta(), model).value;
  j.pb = overlap_prob(p.qb(), p.tb(), model).value;
  j.dpa = overlap_prob_gradient(p.qa(), p.ta(), model).d_theta;
  j.dpb = overlap_prob_gradient(p.qb(), p.tb(), model).d_theta;
  return j;
}

ClosedQfim qfim_alice_closed(double pa, double pb, double dpa_dtheta_a,
                             double dpb_dtheta_b) {
  const double pbar_a = 1.0 - pa;
  const double dpbar_a = -dpa_dtheta_a;
  const double w = pb * pbar_a;
  const double w2 = w * w;
  ClosedQfim out;
  out.singular = w2 > 1.0 - kPureBranchBand;
  const double scale = out.singular ? 1.0 : 1.0 / (1.0 - w2);
  const double mixed_bb = out.singular ? w2 : w2 * (1.0 - w2);
  out.matrix(0, 0) = std::pow(pb * dpbar_a, 2) * scale;
  out.matrix(0, 1) = out.matrix(1, 0) = w * dpb_dtheta_b * dpbar_a * scale;
  out.matrix(1, 1) = (mixed_bb + std::pow(pbar_a * dpb_dtheta_b, 2)) * scale;
  return out;
}

ClosedQfim qfim_bob_closed(double pa, double pb, double dpa_dtheta_a,
                           double dpb_dtheta_b) {
  ClosedQfim out = qfim_alice_closed(pb, pa, dpb_dtheta_b, dpa_dtheta_a);
  std::swap(out.matrix(0, 0), out.matrix(1, 1));
  return out;
}

double fisher_theta_a(const ProbabilityJet& j) {
  return qfim_bob_closed(j.pa, j.pb, j.dpa, j.dpb).matrix(0, 0);
}

double fisher_theta_b(const ProbabilityJet& j) {
  return qfim_alice_closed(j.pa, j.pb, j.dpa, j.dpb).matrix(1, 1);
}

double Bound::as_double() const {
  switch (status) {
    case Status::Finite:
      return value;
    case Status::Infinite:
      return std::numeric_limits<double>::infinity();
    case Status::Undefined:
      break;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

Bound Bound::ratio(double num, double den) {
  if (!std::isfinite(num) || !std::isfinite(den)) return {0.0, Status::Undefined};
  if (den == 0.0) {
    return num == 0.0 ? Bound{0.0, Status::Undefined}
                      : Bound{0.0, Status::Infinite};
  }
  return {num / den, Status::Finite};
}

std::string_view to_string(Bound::Status s) {
  switch (s) {
    case Bound::Status::Finite:
      return "finite";
    case Bound::Status::Infinite:
      return "infinite";
    case Bound::Status::Undefined:
      return "undefined";
  }
  return "?";
}

VarianceReport variance_bounds(const ProbabilityJet& j) {
  const double pbar_a = 1.0 - j.pa;
  const double pbar_b = 1.0 - j.pb;
  const double w_ab = j.pa * pbar_b;
  const double w_ba = j.pb * pbar_a;
  const double fa = fisher_theta_a(j);
  const double fb = fisher_theta_b(j);

  VarianceReport r;
  r.var_ind_a = Bound::ratio(1.0, fa);
  r.var_ind_b = Bound::ratio(1.0, fb);
  r.var_ind_a_printed =
      Bound::ratio(1.0 - w_ab * w_ab, w_ab * w_ab * (1.0 - w_ab * w_ab) +
                                          std::pow(pbar_a * j.dpa, 2));
  r.var_sim_a = Bound::ratio(1.0, w_ab * w_ab);
  r.var_sim_b = Bound::ratio(1.0, w_ba * w_ba);

  // d pbar_b / d theta_b = -dpb; d pbar_a / d theta_b = 0; d pbar_a / d theta_a = -dpa.
  const double dpbar_b_dtb = -j.dpb;
  const double dpbar_a_dtb = 0.0;
  const double dpbar_a_dta = -j.dpa;
  r.var_sim_a_printed =
      Bound::ratio(std::pow(j.pa * dpbar_b_dtb, 2),
                   pbar_b * pbar_b * std::pow(j.pa, 4) * dpbar_b_dtb * dpbar_b_dtb);
  r.var_sim_b_printed =
      Bound::ratio(std::pow(j.pb * dpbar_a_dtb, 2),
                   pbar_a * pbar_a * std::pow(j.pb, 4) * dpbar_a_dta * dpbar_a_dta);

  const Eigen::Matrix2d fbob = qfim_bob_closed(j.pa, j.pb, j.dpa, j.dpb).matrix;
  const Eigen::Matrix2d falice = qfim_alice_closed(j.pa, j.pb, j.dpa, j.dpb).matrix;
  r.inverse_qfim_aa = Bound::ratio(fbob(1, 1), fbob.determinant());
  r.inverse_qfim_bb = Bound::ratio(falice(0, 0), falice.determinant());

  // (1/F) / (1/w^2) = w^2 / F; F >= w^2, so the ratio stays in [0, 1].
  r.delta_alice = Bound::ratio(w_ab * w_ab, fa);
  r.delta_bob = Bound::ratio(w_ba * w_ba, fb);
  return r;
}

namespace {

void append_clamps(SweepResult& r) {
  for (auto& d : clamp_diagnostics(r.config)) r.diagnostics.push_back(std::move(d));
}

}  // namespace

SweepResult qfi_surface(const SweepConfig& config) {
  Param wrt;
  if (config.quantity == Quantity::QfiThetaA) {
    wrt = Param::ThetaA;
  } else if (config.quantity == Quantity::QfiThetaB) {
    wrt = Param::ThetaB;
  } else {
    throw ConfigError("quantity " + std::string(to_string(config.quantity)) +
                      " is not a Fisher information");
  }
  const ParamBlochCurve curve(config.side, config.model);
  SweepResult r;
  r.config = config;
  r.grid = evaluate_grid(config, [&](const ProtocolParams& p) {
    return qfim_bloch(curve, p, wrt, wrt);
  });
  r.extrema = find_extrema(config, r.grid);
  append_clamps(r);
  return r;
}

SweepResult ratio_surface(const SweepConfig& config) {
  if (config.quantity != Quantity::Delta && config.quantity != Quantity::DeltaBob) {
    throw ConfigError("quantity " + std::string(to_string(config.quantity)) +
                      " is not a variance ratio");
  }
  const bool alice = config.quantity == Quantity::Delta;
  SweepResult r;
  r.config = config;
  r.grid = evaluate_grid(config, [&](const ProtocolParams& p) {
    const VarianceReport v = variance_bounds(jet_at(p, config.model));
    return (alice ? v.delta_alice : v.delta_bob).as_double();
  });
  r.extrema = find_extrema(config, r.grid);

  int undefined = 0;
  int outside = 0;
  for (double x : r.grid.values) {
    if (!std::isfinite(x)) {
      ++undefined;
    } else if (x < -kCompareTol || x > 1.0 + kCompareTol) {
      ++outside;
    }
  }
  const std::string name(to_string(config.quantity));
  r.diagnostics.push_back(name + " outside [0, 1] at " + std::to_string(outside) +
                          " of " + std::to_string(r.grid.values.size()) +
                          " grid points");
  if (undefined > 0) {
    r.diagnostics.push_back(name + " undefined (0/0, zero weight and zero "
                            "information) at " + std::to_string(undefined) +
                            " grid points");
  }
  append_clamps(r);
  return r;
}

}  // namespace bqt
