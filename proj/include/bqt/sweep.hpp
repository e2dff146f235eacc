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

// Sweep configuration files, named figure presets and CSV output.
//
// Config format, one setting per line:
//
//   # comment
//   preset = fig7a              (optional; must come first)
//   axis1 = theta_a:0:pi:64     (name:start:stop:steps)
//   axis2 = theta_b:0:pi:64
//   theta_t = pi/4              (any sweep parameter id pins a value)
//   quantity = QFI_theta_a
//   side = Bob
//   prob_model = overlap
//
// Numbers accept "pi" terms: pi, -pi/4, 3*pi/4, 0.5pi, 2.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bqt/grid.hpp"

namespace bqt {

/// Parses "3*pi/4"-style values. Throws ConfigError.
double parse_angle(std::string_view text);

std::optional<SweepConfig> preset(std::string_view name);
const std::vector<std::string>& preset_names();

/// Throws ConfigError with the offending line number.
SweepConfig parse_config(std::string_view text);

/// A preset name or a config file path. Throws ConfigError for parse errors
/// and std::ios_base::failure when the file cannot be read.
SweepConfig load_config(const std::string& path_or_preset);

/// Dispatches on config.quantity.
SweepResult run_sweep(const SweepConfig& config);

/// "%.12g" ("nan", "inf" and "-inf" for non-finite values).
std::string format_number(double x);

/// "#"-prefixed config echo (including defaulted angles), extrema and
/// diagnostics, then "axis1,axis2,value" rows in row-major order.
void write_csv(const SweepResult& result, std::ostream& out);

/// Throws std::ios_base::failure when the file cannot be written.
void write_csv_file(const SweepResult& result, const std::filesystem::path& path);

}  // namespace bqt
