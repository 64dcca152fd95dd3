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

#include <string_view>

#include "wqed/operators.hpp"

namespace wqed {

enum class SteadyMethod { NullSpace, Evolution };

std::string_view to_string(SteadyMethod method);

struct SteadyResult {
  DensityMatrix rho;
  int kernel_dim = 0;
  SteadyMethod method = SteadyMethod::NullSpace;
  double residual = 0.0;  ///< ||L vec(rho)||
};

struct SteadyOptions {
  double kernel_tolerance = kDefaultKernelTolerance;  ///< relative to ||L||
  double dt = 1e-3;                 ///< RK4 step for the evolution fallback
  double check_interval = 1.0;      ///< time between stationarity checks
  double t_max = 1e4;               ///< give up after this time
  double stationarity_tol = 1e-10;  ///< ||rho(t + interval) - rho(t)||_F
};

/// Largest admissible ||L vec(rho)|| of a reported steady state.
inline constexpr double kSteadyResidualTolerance = 1e-8;

/// One classical RK4 step of d/dt v = L v written as a matrix:
/// I + hL + (hL)^2/2 + (hL)^3/6 + (hL)^4/24.
Superoperator rk4_step_matrix(const Superoperator& l, double dt);

/// Fixed-step RK4 integration of d rho/dt = L rho up to t_final. The step is
/// shrunk to divide t_final evenly. The result is Hermitized and
/// trace-renormalized. Throws ConvergenceError when the trace drifts by more
/// than 1e-6 or the state norm grows (dt too large for L).
DensityMatrix evolve(const Superoperator& l, const DensityMatrix& rho0, double t_final, double dt = 1e-3);

/// Stationary state of L.
///
/// A one-dimensional kernel is reshaped into rho directly. A degenerate
/// kernel (dark subspaces at phi = n pi) is resolved physically: the state is
/// evolved from `initial` until it stops changing. Throws ConvergenceError if
/// that does not happen before options.t_max.
SteadyResult steady_state(const Superoperator& l, const DensityMatrix& initial = DensityMatrix::ground(),
                          const SteadyOptions& options = {});

/// Slowest nonzero relaxation rate, -max{Re lambda : |lambda| > 1e-9}.
/// Returns +infinity when L has no nonzero eigenvalue.
double liouvillian_gap(const Superoperator& l);

}  // namespace wqed
