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

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "wqed/model.hpp"

namespace wqed {

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;      ///< worst observed residual or distance
  double tolerance = 0.0;
  std::string detail;
};

/// Ranges used by random draws: J in [0, 2], theta and phi in [0, 2pi),
/// detunings in [-1.5, 1.5], p in [0.01, 5], Gamma = 1, no extra loss.
struct RandomPoint {
  SystemParams params;
  double power = 1.0;
};

RandomPoint draw_point(std::mt19937_64& rng, bool symmetric_detuning = false);

/// Generator equivalence, steady state vs long-time evolution, symmetry
/// identities, pure-state invariants, one-way couplings and density-matrix
/// hygiene. Deterministic for a given seed.
std::vector<CheckResult> run_invariant_suite(std::uint64_t seed = 20260101);

/// One line per check: "PASS name value <= tolerance (detail)".
void print_report(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace wqed
