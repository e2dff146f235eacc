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

#include "bqt/grid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace bqt {

namespace {

constexpr std::array<std::pair<SweepParam, std::string_view>, 9> kParamNames = {{
    {SweepParam::ThetaA, "theta_a"},
    {SweepParam::ThetaB, "theta_b"},
    {SweepParam::PhiA, "phi_a"},
    {SweepParam::PhiB, "phi_b"},
    {SweepParam::TriggerA, "theta_t_a"},
    {SweepParam::TriggerB, "theta_t_b"},
    {SweepParam::Phi, "phi"},
    {SweepParam::Trigger, "theta_t"},
    {SweepParam::Vartheta, "vartheta"},
}};

constexpr std::array<std::pair<Quantity, std::string_view>, 7> kQuantityNames = {{
    {Quantity::FidelityAB, "FidelityAB"},
    {Quantity::FidelityBA, "FidelityBA"},
    {Quantity::QfiThetaA, "QFI_theta_a"},
    {Quantity::QfiThetaB, "QFI_theta_b"},
    {Quantity::Delta, "Delta"},
    {Quantity::DeltaBob, "delta"},
    {Quantity::AvgFidelity, "AvgFidelity"},
}};

}  // namespace

std::string_view to_string(SweepParam p) {
  for (const auto& [k, name] : kParamNames) {
    if (k == p) return name;
  }
  return "?";
}

std::optional<SweepParam> parse_sweep_param(std::string_view name) {
  for (const auto& [k, n] : kParamNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::vector<Param> underlying(SweepParam p) {
  switch (p) {
    case SweepParam::ThetaA:
      return {Param::ThetaA};
    case SweepParam::ThetaB:
      return {Param::ThetaB};
    case SweepParam::PhiA:
      return {Param::PhiA};
    case SweepParam::PhiB:
      return {Param::PhiB};
    case SweepParam::TriggerA:
      return {Param::TriggerA};
    case SweepParam::TriggerB:
      return {Param::TriggerB};
    case SweepParam::Phi:
      return {Param::PhiA, Param::PhiB};
    case SweepParam::Trigger:
      return {Param::TriggerA, Param::TriggerB};
    case SweepParam::Vartheta:
      return {Param::ThetaA, Param::ThetaB, Param::TriggerA, Param::TriggerB};
  }
  return {};
}

std::string_view to_string(Quantity q) {
  for (const auto& [k, name] : kQuantityNames) {
    if (k == q) return name;
  }
  return "?";
}

std::optional<Quantity> parse_quantity(std::string_view name) {
  for (const auto& [k, n] : kQuantityNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::string_view to_string(Side s) { return s == Side::Alice ? "Alice" : "Bob"; }

std::optional<Side> parse_side(std::string_view name) {
  if (name == "Alice" || name == "alice") return Side::Alice;
  if (name == "Bob" || name == "bob") return Side::Bob;
  return std::nullopt;
}

void SweepConfig::pin(SweepParam p, double value) {
  for (auto& [k, v] : pinned) {
    if (k == p) {
      v = value;
      return;
    }
  }
  pinned.emplace_back(p, value);
}

void SweepConfig::validate() const {
  for (const Axis* axis : {&axis1, &axis2}) {
    const std::string key = axis == &axis1 ? "axis1" : "axis2";
    if (axis->steps < 2) {
      throw ConfigError(key + ": steps must be >= 2 (got " +
                        std::to_string(axis->steps) + ")");
    }
    if (!std::isfinite(axis->start) || !std::isfinite(axis->stop)) {
      throw ConfigError(key + ": bounds must be finite");
    }
  }

  // Every protocol angle may be claimed by at most one axis or pin.
  std::array<std::string, 6> owner;
  auto claim = [&](SweepParam p, const std::string& who) {
    for (Param q : underlying(p)) {
      std::string& slot = owner[static_cast<int>(q)];
      if (!slot.empty()) {
        throw ConfigError(who + " conflicts with " + slot + " over " +
                          std::string(to_string(q)));
      }
      slot = who;
    }
  };
  claim(axis1.param, "axis1 (" + std::string(to_string(axis1.param)) + ")");
  claim(axis2.param, "axis2 (" + std::string(to_string(axis2.param)) + ")");
  for (const auto& [p, v] : pinned) {
    if (!std::isfinite(v)) {
      throw ConfigError(std::string(to_string(p)) + ": value must be finite");
    }
    claim(p, "pinned " + std::string(to_string(p)));
  }

  if (quantity == Quantity::AvgFidelity) {
    // The sender's qubit is integrated over the sphere.
    const Param th = side == Side::Bob ? Param::ThetaA : Param::ThetaB;
    const Param ph = side == Side::Bob ? Param::PhiA : Param::PhiB;
    for (Param q : {th, ph}) {
      if (!owner[static_cast<int>(q)].empty()) {
        throw ConfigError("quantity AvgFidelity integrates over " +
                          std::string(to_string(q)) + ", but it is set by " +
                          owner[static_cast<int>(q)]);
      }
    }
  }
}

ProtocolParams SweepConfig::point(double v1, double v2) const {
  ProtocolParams p;
  for (const auto& [k, v] : pinned) {
    for (Param q : underlying(k)) p[q] = v;
  }
  for (Param q : underlying(axis1.param)) p[q] = v1;
  for (Param q : underlying(axis2.param)) p[q] = v2;
  return p;
}

std::vector<Param> SweepConfig::defaulted() const {
  std::array<bool, 6> set{};
  auto mark = [&](SweepParam s) {
    for (Param q : underlying(s)) set[static_cast<int>(q)] = true;
  };
  mark(axis1.param);
  mark(axis2.param);
  for (const auto& [k, v] : pinned) mark(k);
  std::vector<Param> out;
  for (Param q : kAllParams) {
    if (!set[static_cast<int>(q)]) out.push_back(q);
  }
  return out;
}

Grid evaluate_grid(const SweepConfig& config,
                   const std::function<double(const ProtocolParams&)>& fn) {
  config.validate();
  Grid g;
  g.rows = config.axis1.steps;
  g.cols = config.axis2.steps;
  g.values.assign(std::size_t(g.rows) * g.cols, 0.0);

  auto row = [&](int r) {
    const double v1 = config.axis1.at(r);
    for (int c = 0; c < g.cols; ++c) {
      g.values[std::size_t(r) * g.cols + c] = fn(config.point(v1, config.axis2.at(c)));
    }
  };

  const int workers = std::clamp<int>(int(std::thread::hardware_concurrency()), 1, g.rows);
  if (workers == 1) {
    for (int r = 0; r < g.rows; ++r) row(r);
    return g;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (int r = w; r < g.rows; r += workers) row(r);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
  return g;
}

Extrema find_extrema(const SweepConfig& config, const Grid& grid) {
  Extrema e;
  bool first = true;
  for (int r = 0; r < grid.rows; ++r) {
    for (int c = 0; c < grid.cols; ++c) {
      const double v = grid.at(r, c);
      if (!std::isfinite(v)) {
        ++e.non_finite;
        continue;
      }
      const std::pair<double, double> at{config.axis1.at(r), config.axis2.at(c)};
      if (first || v > e.max) {
        e.max = v;
        e.argmax = at;
      }
      if (first || v < e.min) {
        e.min = v;
        e.argmin = at;
      }
      first = false;
    }
  }
  return e;
}

std::vector<std::string> clamp_diagnostics(const SweepConfig& config) {
  int clamped_a = 0;
  int clamped_b = 0;
  for (int r = 0; r < config.axis1.steps; ++r) {
    for (int c = 0; c < config.axis2.steps; ++c) {
      const ProtocolParams p = config.point(config.axis1.at(r), config.axis2.at(c));
      if (overlap_prob(p.qa(), p.ta(), config.model).clamped) ++clamped_a;
      if (overlap_prob(p.qb(), p.tb(), config.model).clamped) ++clamped_b;
    }
  }
  std::vector<std::string> out;
  const int total = config.axis1.steps * config.axis2.steps;
  if (clamped_a > 0) {
    out.push_back("p_a clamped to [0, 1] at " + std::to_string(clamped_a) +
                  " of " + std::to_string(total) + " grid points");
  }
  if (clamped_b > 0) {
    out.push_back("p_b clamped to [0, 1] at " + std::to_string(clamped_b) +
                  " of " + std::to_string(total) + " grid points");
  }
  return out;
}

}  // namespace bqt
