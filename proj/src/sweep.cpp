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

#include "bqt/sweep.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <tuple>

#include "bqt/estimation.hpp"
#include "bqt/fidelity.hpp"

namespace bqt {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

double parse_angle(std::string_view text) {
  const std::string original(text);
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s += c;
  }
  auto fail = [&]() -> double {
    throw ConfigError("cannot parse number '" + original + "'");
  };
  if (s.empty()) fail();

  std::size_t i = 0;
  double sign = 1.0;
  if (s[i] == '+' || s[i] == '-') {
    sign = s[i] == '-' ? -1.0 : 1.0;
    ++i;
  }
  auto factor = [&]() -> double {
    double v = 1.0;
    bool any = false;
    if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) {
      const char* begin = s.data() + i;
      const auto [end, ec] = std::from_chars(begin, s.data() + s.size(), v);
      if (ec != std::errc()) fail();
      i += std::size_t(end - begin);
      any = true;
    }
    if (s.compare(i, 2, "pi") == 0) {
      v *= std::numbers::pi;
      i += 2;
      any = true;
    }
    if (!any) fail();
    return v;
  };

  double value = factor();
  while (i < s.size()) {
    const char op = s[i++];
    if (op == '*') {
      value *= factor();
    } else if (op == '/') {
      const double d = factor();
      if (d == 0.0) fail();
      value /= d;
    } else {
      fail();
    }
  }
  value *= sign;
  if (!std::isfinite(value)) fail();
  return value;
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kPresetSteps = 64;

Axis axis(SweepParam p, double stop) { return {p, 0.0, stop, kPresetSteps}; }

SweepConfig make(const std::string& name, SweepParam a1, double stop1,
                 SweepParam a2, double stop2, Quantity q, Side side,
                 std::vector<std::pair<SweepParam, double>> pins) {
  SweepConfig c;
  c.preset = name;
  c.axis1 = axis(a1, stop1);
  c.axis2 = axis(a2, stop2);
  c.quantity = q;
  c.side = side;
  c.pinned = std::move(pins);
  return c;
}

const std::map<std::string, SweepConfig, std::less<>>& presets() {
  using P = SweepParam;
  using Q = Quantity;
  static const auto table = [] {
    std::map<std::string, SweepConfig, std::less<>> m;
    auto add = [&](const SweepConfig& c) { m.emplace(c.preset, c); };
    // Triggers swept, data qubits at the poles or on the equator.
    add(make("fig2a", P::TriggerA, kPi, P::TriggerB, kPi, Q::FidelityAB, Side::Bob,
             {{P::ThetaA, 0.0}, {P::ThetaB, 0.0}}));
    add(make("fig2b", P::TriggerA, kPi, P::TriggerB, kPi, Q::FidelityBA, Side::Alice,
             {{P::ThetaA, 0.0}, {P::ThetaB, 0.0}}));
    add(make("fig3a", P::TriggerA, kPi, P::TriggerB, kPi, Q::FidelityAB, Side::Bob,
             {{P::ThetaA, kPi / 2}, {P::ThetaB, kPi / 2}}));
    add(make("fig3b", P::TriggerA, kPi, P::TriggerB, kPi, Q::FidelityBA, Side::Alice,
             {{P::ThetaA, kPi / 2}, {P::ThetaB, kPi / 2}}));
    // All four polar angles tied to vartheta, both phases to phi.
    add(make("fig4", P::Vartheta, kPi, P::Phi, 2 * kPi, Q::FidelityAB, Side::Bob, {}));
    add(make("fig5a", P::ThetaA, kPi, P::Trigger, kPi, Q::FidelityAB, Side::Bob,
             {{P::ThetaB, 0.0}}));
    add(make("fig5b", P::ThetaA, kPi, P::Trigger, kPi, Q::FidelityAB, Side::Bob,
             {{P::ThetaB, kPi / 4}}));
    // Fisher information on theta_a at Bob and on theta_b at Alice.
    const std::array<std::pair<std::string, std::vector<std::pair<P, double>>>, 4>
        qfi = {{{"6a", {{P::Trigger, 0.0}}},
                {"6b", {{P::Trigger, kPi}}},
                {"7a", {{P::Trigger, kPi / 4}, {P::Phi, 0.0}}},
                {"7b", {{P::Trigger, kPi / 4}, {P::Phi, kPi / 2}}}}};
    for (const auto& [tag, pins] : qfi) {
      add(make("fig" + tag, P::ThetaA, kPi, P::ThetaB, kPi, Q::QfiThetaA, Side::Bob,
               pins));
    }
    const std::array<std::string, 4> fig8 = {"fig8a", "fig8b", "fig8c", "fig8d"};
    for (int i = 0; i < 4; ++i) {
      add(make(fig8[i], P::ThetaA, kPi, P::ThetaB, kPi, Q::QfiThetaB, Side::Alice,
               qfi[i].second));
    }
    // Variance ratios; c and d repeat a and b at phi = pi/2.
    for (const auto& [alice, bob, phi] :
         {std::tuple{"fig9a", "fig9b", 0.0}, std::tuple{"fig9c", "fig9d", kPi / 2}}) {
      add(make(alice, P::ThetaA, kPi, P::Trigger, kPi, Q::Delta, Side::Bob,
               {{P::ThetaB, kPi / 4}, {P::Phi, phi}}));
      add(make(bob, P::ThetaB, kPi, P::Trigger, kPi, Q::DeltaBob, Side::Alice,
               {{P::ThetaA, kPi / 4}, {P::Phi, phi}}));
    }
    return m;
  }();
  return table;
}

}  // namespace

std::optional<SweepConfig> preset(std::string_view name) {
  const auto& m = presets();
  const auto it = m.find(name);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, c] : presets()) v.push_back(name);
    return v;
  }();
  return names;
}

namespace {

Axis parse_axis(std::string_view key, std::string_view value, int line) {
  const std::string where = std::string(key) + ": ";
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = value.find(':', start);
    parts.push_back(trim(value.substr(start, colon - start)));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 4) {
    throw ConfigError(where + "expected name:start:stop:steps, got '" +
                          std::string(value) + "'",
                      line);
  }
  const auto param = parse_sweep_param(parts[0]);
  if (!param) {
    throw ConfigError(where + "unknown parameter '" + std::string(parts[0]) + "'",
                      line);
  }
  Axis a;
  a.param = *param;
  try {
    a.start = parse_angle(parts[1]);
    a.stop = parse_angle(parts[2]);
  } catch (const ConfigError& e) {
    throw ConfigError(where + e.what(), line);
  }
  int steps = 0;
  const auto [end, ec] =
      std::from_chars(parts[3].data(), parts[3].data() + parts[3].size(), steps);
  if (ec != std::errc() || end != parts[3].data() + parts[3].size()) {
    throw ConfigError(where + "steps must be an integer, got '" +
                          std::string(parts[3]) + "'",
                      line);
  }
  a.steps = steps;
  return a;
}

}  // namespace

SweepConfig parse_config(std::string_view text) {
  SweepConfig c;
  bool any_setting = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("expected 'key = value', got '" + std::string(line) + "'",
                        line_no);
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (value.empty()) {
      throw ConfigError("missing value for '" + std::string(key) + "'", line_no);
    }

    if (key == "preset") {
      if (any_setting) {
        throw ConfigError("preset must come before other settings", line_no);
      }
      auto p = preset(value);
      if (!p) {
        throw ConfigError("unknown preset '" + std::string(value) + "'", line_no);
      }
      c = *p;
    } else if (key == "axis1") {
      c.axis1 = parse_axis(key, value, line_no);
    } else if (key == "axis2") {
      c.axis2 = parse_axis(key, value, line_no);
    } else if (key == "quantity") {
      const auto q = parse_quantity(value);
      if (!q) {
        throw ConfigError("unknown quantity '" + std::string(value) + "'", line_no);
      }
      c.quantity = *q;
    } else if (key == "side") {
      const auto s = parse_side(value);
      if (!s) throw ConfigError("unknown side '" + std::string(value) + "'", line_no);
      c.side = *s;
    } else if (key == "prob_model") {
      try {
        c.model = parse_prob_model(value);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what(), line_no);
      }
    } else if (const auto param = parse_sweep_param(key)) {
      try {
        c.pin(*param, parse_angle(value));
      } catch (const ConfigError& e) {
        throw ConfigError(e.what(), line_no);
      }
    } else {
      throw ConfigError("unknown key '" + std::string(key) + "'", line_no);
    }
    any_setting = true;
  }
  c.validate();
  return c;
}

SweepConfig load_config(const std::string& path_or_preset) {
  if (auto p = preset(path_or_preset)) return *p;
  std::ifstream in(path_or_preset);
  if (!in) {
    throw std::ios_base::failure("cannot read config '" + path_or_preset + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

SweepResult run_sweep(const SweepConfig& config) {
  switch (config.quantity) {
    case Quantity::FidelityAB:
    case Quantity::FidelityBA:
    case Quantity::AvgFidelity:
      return fidelity_surface(config);
    case Quantity::QfiThetaA:
    case Quantity::QfiThetaB:
      return qfi_surface(config);
    case Quantity::Delta:
    case Quantity::DeltaBob:
      return ratio_surface(config);
  }
  throw ConfigError("unknown quantity");
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);  // no "-0"
  return buf;
}

namespace {

std::string axis_text(const Axis& a) {
  return std::string(to_string(a.param)) + ":" + format_number(a.start) + ":" +
         format_number(a.stop) + ":" + std::to_string(a.steps);
}

}  // namespace

void write_csv(const SweepResult& r, std::ostream& out) {
  const SweepConfig& c = r.config;
  out << "# bqt sweep\n";
  if (!c.preset.empty()) out << "# preset = " << c.preset << "\n";
  out << "# quantity = " << to_string(c.quantity) << "\n";
  out << "# side = " << to_string(c.side) << "\n";
  out << "# prob_model = " << to_string(c.model) << "\n";
  out << "# axis1 = " << axis_text(c.axis1) << "\n";
  out << "# axis2 = " << axis_text(c.axis2) << "\n";
  for (const auto& [p, v] : c.pinned) {
    out << "# " << to_string(p) << " = " << format_number(v) << "\n";
  }
  for (Param p : c.defaulted()) {
    out << "# " << to_string(p) << " = 0 (default)\n";
  }
  const Extrema& e = r.extrema;
  out << "# max = " << format_number(e.max) << " at (" << format_number(e.argmax.first)
      << ", " << format_number(e.argmax.second) << ")\n";
  out << "# min = " << format_number(e.min) << " at (" << format_number(e.argmin.first)
      << ", " << format_number(e.argmin.second) << ")\n";
  out << "# non_finite = " << e.non_finite << "\n";
  for (const auto& d : r.diagnostics) out << "# diagnostic: " << d << "\n";
  out << "axis1,axis2,value\n";
  for (int i = 0; i < r.grid.rows; ++i) {
    const std::string x = format_number(c.axis1.at(i));
    for (int j = 0; j < r.grid.cols; ++j) {
      out << x << ',' << format_number(c.axis2.at(j)) << ','
          << format_number(r.grid.at(i, j)) << '\n';
    }
  }
}

void write_csv_file(const SweepResult& result, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write '" + path.string() + "'");
  write_csv(result, out);
  out.flush();
  if (!out) throw std::ios_base::failure("error writing '" + path.string() + "'");
}

}  // namespace bqt
