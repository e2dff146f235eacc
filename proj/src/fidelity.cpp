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

#include "bqt/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bqt {

FidelityParams FidelityParams::from_weight(double w, Direction d) {
  if (!(w >= 0.0 && w <= 1.0)) {
    throw std::domain_error("FidelityParams: weight " + std::to_string(w) +
                            " outside [0, 1]");
  }
  return {w, 0.5 * (1.0 - w), d};
}

FidelityParams FidelityParams::from_probabilities(double pa, double pb,
                                                  Direction d) {
  const double w = d == Direction::AliceToBob ? pa * (1.0 - pb) : pb * (1.0 - pa);
  return from_weight(w, d);
}

double point_fidelity(const PureQubit& initial, const PureQubit& teleported,
                      const FidelityParams& params) {
  const double ci = std::cos(initial.theta.radians() / 2);
  const double ct = std::cos(teleported.theta.radians() / 2);
  const std::complex<double> si =
      std::polar(std::sin(initial.theta.radians() / 2), initial.phi.radians());
  const std::complex<double> st = std::polar(
      std::sin(teleported.theta.radians() / 2), teleported.phi.radians());
  const double a1 = params.a1;
  const double a2 = params.a2;
  const double f = ci * ci * (a2 + a1 * ct * ct) +
                   a1 * 2.0 * (ci * ct * si * std::conj(st)).real() +
                   std::norm(si) * (a1 * std::norm(st) + a2);
  return std::clamp(f, 0.0, 1.0);
}

double direction_fidelity(double p_sender, double p_receiver) {
  for (double p : {p_sender, p_receiver}) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::domain_error("direction_fidelity: probability " +
                              std::to_string(p) + " outside [0, 1]");
    }
  }
  return 0.5 * (1.0 + p_sender * (1.0 - p_receiver));
}

void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi's estimate, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[i] = weights[n - 1 - i] = w;
  }
}

namespace {

double sphere_rule(const std::function<double(double, double)>& f, int nt,
                   int np) {
  std::vector<double> x;
  std::vector<double> w;
  gauss_legendre(nt, x, w);
  const double pi = std::numbers::pi;
  double total = 0.0;
  for (int i = 0; i < nt; ++i) {
    const double theta = 0.5 * pi * (x[i] + 1.0);
    double ring = 0.0;
    for (int j = 0; j < np; ++j) ring += f(theta, 2.0 * pi * j / np);
    total += w[i] * std::sin(theta) * ring;
  }
  // d theta = pi/2 dx, d phi = 2 pi / np per node, normalized by 4 pi.
  return total * (0.5 * pi) * (2.0 * pi / np) / (4.0 * pi);
}

}  // namespace

QuadratureResult sphere_average(const std::function<double(double, double)>& f,
                                const IntegrationSpec& spec) {
  if (spec.theta_nodes < kMinQuadratureNodes ||
      spec.phi_nodes < kMinQuadratureNodes) {
    throw std::invalid_argument("sphere_average: at least " +
                                std::to_string(kMinQuadratureNodes) +
                                " nodes per dimension required");
  }
  if (!(spec.tolerance > 0.0)) {
    throw std::invalid_argument("sphere_average: tolerance must be positive");
  }
  const double coarse = sphere_rule(f, spec.theta_nodes, spec.phi_nodes);
  const double fine = sphere_rule(f, 2 * spec.theta_nodes, 2 * spec.phi_nodes);
  const double delta = std::abs(fine - coarse);
  if (!(delta <= spec.tolerance)) {
    throw std::runtime_error("sphere_average: not converged (doubling changed "
                             "the result by " + std::to_string(delta) + ")");
  }
  return {fine, delta};
}

QuadratureResult averaged_fidelity(
    const std::function<double(const PureQubit&)>& fidelity_of_input,
    const IntegrationSpec& spec) {
  return sphere_average(
      [&](double theta, double phi) {
        return fidelity_of_input(PureQubit(theta, phi));
      },
      spec);
}

double direction_fidelity_at(const ProtocolParams& p, Direction d,
                             ProbModel model) {
  const double pa = overlap_prob(p.qa(), p.ta(), model).value;
  const double pb = overlap_prob(p.qb(), p.tb(), model).value;
  return d == Direction::AliceToBob ? direction_fidelity(pa, pb)
                                    : direction_fidelity(pb, pa);
}

QuadratureResult averaged_direction_fidelity(const ProtocolParams& p,
                                             Direction d, ProbModel model,
                                             const IntegrationSpec& spec) {
  const bool alice_sends = d == Direction::AliceToBob;
  const double p_receiver =
      alice_sends ? overlap_prob(p.qb(), p.tb(), model).value
                  : overlap_prob(p.qa(), p.ta(), model).value;
  const TriggerSpec t = alice_sends ? p.ta() : p.tb();
  // The receiver gets the sender's own state, so the pointwise fidelity
  // reduces to A1 + A2.
  return averaged_fidelity(
      [&](const PureQubit& q) {
        const FidelityParams fp = FidelityParams::from_weight(
            overlap_prob(q, t, model).value * (1.0 - p_receiver), d);
        return point_fidelity(q, q, fp);
      },
      spec);
}

SweepResult fidelity_surface(const SweepConfig& config) {
  std::function<double(const ProtocolParams&)> fn;
  switch (config.quantity) {
    case Quantity::FidelityAB:
      fn = [&](const ProtocolParams& p) {
        return direction_fidelity_at(p, Direction::AliceToBob, config.model);
      };
      break;
    case Quantity::FidelityBA:
      fn = [&](const ProtocolParams& p) {
        return direction_fidelity_at(p, Direction::BobToAlice, config.model);
      };
      break;
    case Quantity::AvgFidelity: {
      const Direction d = config.side == Side::Bob ? Direction::AliceToBob
                                                   : Direction::BobToAlice;
      // Clamped phase-sum integrands have kinks and may not converge; such
      // points become NaN and are counted as non-finite.
      fn = [&, d](const ProtocolParams& p) {
        try {
          return averaged_direction_fidelity(p, d, config.model).value;
        } catch (const std::runtime_error&) {
          return std::nan("");
        }
      };
      break;
    }
    default:
      throw ConfigError("quantity " + std::string(to_string(config.quantity)) +
                        " is not a fidelity");
  }
  SweepResult r;
  r.config = config;
  r.grid = evaluate_grid(config, fn);
  r.extrema = find_extrema(config, r.grid);
  r.diagnostics = clamp_diagnostics(config);
  return r;
}

}  // namespace bqt
