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

// Two-axis parameter scans over the protocol angles.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bqt/protocol.hpp"

namespace bqt {

/// A scan coordinate. The last three tie several protocol angles together:
/// phi = (phi_a, phi_b), theta_t = (theta_t_a, theta_t_b) and
/// vartheta = (theta_a, theta_b, theta_t_a, theta_t_b).
enum class SweepParam {
  ThetaA,
  ThetaB,
  PhiA,
  PhiB,
  TriggerA,
  TriggerB,
  Phi,
  Trigger,
  Vartheta,
};

std::string_view to_string(SweepParam p);
std::optional<SweepParam> parse_sweep_param(std::string_view name);
std::vector<Param> underlying(SweepParam p);

enum class Quantity {
  FidelityAB,
  FidelityBA,
  QfiThetaA,
  QfiThetaB,
  Delta,      // variance ratio for theta_a
  DeltaBob,   // variance ratio for theta_b ("delta")
  AvgFidelity,
};

std::string_view to_string(Quantity q);
std::optional<Quantity> parse_quantity(std::string_view name);

enum class Side { Alice, Bob };

std::string_view to_string(Side s);
std::optional<Side> parse_side(std::string_view name);

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct Axis {
  SweepParam param = SweepParam::ThetaA;
  double start = 0.0;
  double stop = 0.0;
  int steps = 2;

  double at(int i) const {
    return start + (stop - start) * double(i) / double(steps - 1);
  }
};

struct SweepConfig {
  std::string preset;  // empty unless expanded from a preset
  Axis axis1;
  Axis axis2{SweepParam::ThetaB};
  std::vector<std::pair<SweepParam, double>> pinned;
  ProbModel model = ProbModel::Overlap;
  Side side = Side::Bob;
  Quantity quantity = Quantity::FidelityAB;

  /// Throws ConfigError naming the offending key.
  void validate() const;

  /// Protocol angles at one grid point: zeros, then pins, then the axes.
  ProtocolParams point(double v1, double v2) const;

  /// Protocol angles that are neither pinned nor scanned (they stay 0).
  std::vector<Param> defaulted() const;

  /// Sets or replaces a pin.
  void pin(SweepParam p, double value);
};

struct Grid {
  int rows = 0;
  int cols = 0;
  std::vector<double> values;  // row-major, rows = axis1

  double at(int r, int c) const { return values[std::size_t(r) * cols + c]; }
};

struct Extrema {
  double max = 0.0;
  std::pair<double, double> argmax{};
  double min = 0.0;
  std::pair<double, double> argmin{};
  int non_finite = 0;  // skipped when locating extrema
};

struct SweepResult {
  SweepConfig config;
  Grid grid;
  Extrema extrema;
  std::vector<std::string> diagnostics;
};

/// Evaluates fn on every grid point, rows in parallel; output order is fixed.
Grid evaluate_grid(const SweepConfig& config,
                   const std::function<double(const ProtocolParams&)>& fn);

Extrema find_extrema(const SweepConfig& config, const Grid& grid);

/// One line per protocol probability that had to be clamped somewhere on the
/// grid; empty for the overlap model.
std::vector<std::string> clamp_diagnostics(const SweepConfig& config);

}  // namespace bqt
