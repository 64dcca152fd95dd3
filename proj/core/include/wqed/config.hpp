// Copyright 2026 The wqed Authors
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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wqed/model.hpp"

namespace wqed {

enum class SweepVariable { Power, J, Theta, Phi, Delta, DeltaAntisym };
enum class SweepScale { Linear, Log };
enum class Direction { Forward, Backward, Both };

enum class Observable { T, T_c, T_inc, R, R_c, R_inc, Purity, Concurrence, G2_T, G2_R };

std::string_view to_string(SweepVariable v);
std::string_view to_string(SweepScale s);
std::string_view to_string(Direction d);
std::string_view to_string(Observable o);

SweepVariable parse_sweep_variable(std::string_view name);
SweepScale parse_sweep_scale(std::string_view name);
Direction parse_direction(std::string_view name);
Observable parse_observable(std::string_view name);

/// True for observables normalized by the drive power.
bool is_intensity(Observable o);

/// One swept axis. Linear axes include `to` unless endpoint is false, which
/// gives half-open ranges such as [0, 2pi).
struct SweepAxis {
  SweepVariable variable = SweepVariable::Power;
  double from = 0.0;
  double to = 1.0;
  int points = 2;
  SweepScale scale = SweepScale::Linear;
  bool endpoint = true;

  void validate() const;
  std::vector<double> values() const;
};

struct RunConfig {
  SystemParams params;
  double power = 1.0;  ///< p = alpha^2
  Direction direction = Direction::Forward;
  std::optional<SweepAxis> sweep;
  std::optional<SweepAxis> grid;  ///< second axis for contour maps
  std::vector<Observable> outputs = {Observable::T, Observable::R};

  void validate() const;
  std::vector<Port> ports() const;
  /// Copy with one swept variable set to `value`.
  RunConfig with(SweepVariable variable, double value) const;
};

/// Parses a number that may carry a factor of pi: "0.25", "pi", "-pi/2",
/// "18pi/25", "2*pi/3". Throws std::invalid_argument otherwise.
double parse_quantity(std::string_view text);

/// Reads a JSON config document. Unknown keys are rejected. Angles and other
/// numbers may be given as strings understood by parse_quantity.
RunConfig parse_config(std::string_view json_text);

/// Applies `key=value` overrides, then parses. Keys are dotted paths
/// ("params.theta", "sweep.points") or the short forms theta, phi, J,
/// delta_a, delta_b, gamma_wg, gamma_a, gamma_b, k, p, alpha.
RunConfig parse_config(std::string_view json_text, const std::vector<std::string>& overrides);

/// Splits "key=value". Throws std::invalid_argument without '='.
std::pair<std::string, std::string> split_override(std::string_view assignment);

/// Canonical, fully resolved JSON form of a config (pretty-printed).
std::string to_json(const RunConfig& config);

}  // namespace wqed
