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

#include "wqed/steady.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace wqed {

namespace {

constexpr double kTraceDriftTolerance = 1e-6;

// A density matrix has Frobenius norm sqrt(purity) <= 1.
constexpr double kNormGrowthTolerance = 1e-6;

void check_step_health(const VecOperator& v, double t) {
  const QOperator rho = unvec(v);
  const double drift = std::abs(rho.trace() - Complex(1.0, 0.0));
  const double norm = rho.norm();
  if (!(drift <= kTraceDriftTolerance) || !(norm <= 1.0 + kNormGrowthTolerance)) {
    std::ostringstream os;
    os << "evolve: integration unstable at t=" << t << " (trace drift " << drift << ", norm " << norm
       << "); reduce dt";
    throw ConvergenceError(os.str(), drift);
  }
}

Superoperator matrix_power(Superoperator base, long exponent) {
  Superoperator result = Superoperator::Identity();
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace

std::string_view to_string(SteadyMethod method) {
  return method == SteadyMethod::NullSpace ? "null-space" : "evolution";
}

Superoperator rk4_step_matrix(const Superoperator& l, double dt) {
  const Superoperator hl = dt * l;
  Superoperator term = Superoperator::Identity();
  Superoperator step = Superoperator::Identity();
  for (int order = 1; order <= 4; ++order) {
    term = term * hl / static_cast<double>(order);
    step += term;
  }
  return step;
}

DensityMatrix evolve(const Superoperator& l, const DensityMatrix& rho0, double t_final, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("evolve: dt must be positive");
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) throw std::invalid_argument("evolve: t_final must be >= 0");
  if (t_final == 0.0) return rho0;

  const long steps = std::max(1L, static_cast<long>(std::ceil(t_final / dt - 1e-9)));
  const double h = t_final / static_cast<double>(steps);
  const Superoperator step = rk4_step_matrix(l, h);

  VecOperator v = vec(rho0.matrix());
  for (long n = 1; n <= steps; ++n) {
    v = step * v;
    check_step_health(v, static_cast<double>(n) * h);
  }
  return DensityMatrix::normalized(unvec(v));
}

SteadyResult steady_state(const Superoperator& l, const DensityMatrix& initial, const SteadyOptions& options) {
  const std::vector<CVector> kernel = null_space(l, options.kernel_tolerance);
  SteadyResult result;
  result.kernel_dim = static_cast<int>(kernel.size());
  if (kernel.empty()) throw ConvergenceError("steady_state: generator has no stationary state", std::nan(""));

  if (kernel.size() == 1) {
    const VecOperator v = kernel.front();
    result.rho = DensityMatrix::normalized(unvec(v));
    result.method = SteadyMethod::NullSpace;
  } else {
    // Degenerate kernel: follow the physical preparation from `initial`.
    const long steps_per_check = std::max(1L, std::lround(options.check_interval / options.dt));
    const double interval = static_cast<double>(steps_per_check) * options.dt;
    const Superoperator chunk = matrix_power(rk4_step_matrix(l, options.dt), steps_per_check);

    VecOperator v = vec(initial.matrix());
    double t = 0.0;
    double change = std::numeric_limits<double>::infinity();
    while (t < options.t_max) {
      const VecOperator next = chunk * v;
      t += interval;
      check_step_health(next, t);
      change = unvec(next - v).norm();
      v = next;
      if (change < options.stationarity_tol) break;
    }
    if (!(change < options.stationarity_tol)) {
      std::ostringstream os;
      os << "steady_state: evolution did not become stationary by t=" << t << " (last change " << change
         << ")";
      throw ConvergenceError(os.str(), (l * v).norm());
    }
    result.rho = DensityMatrix::normalized(unvec(v));
    result.method = SteadyMethod::Evolution;
  }

  result.residual = (l * vec(result.rho.matrix())).norm();
  if (!(result.residual <= kSteadyResidualTolerance)) {
    std::ostringstream os;
    os << "steady_state: residual " << result.residual << " exceeds tolerance";
    throw ConvergenceError(os.str(), result.residual);
  }
  return result;
}

double liouvillian_gap(const Superoperator& l) {
  const std::vector<Complex> spectrum = eig_general(l);
  double slowest = -std::numeric_limits<double>::infinity();
  for (const Complex& lambda : spectrum) {
    if (std::abs(lambda) > 1e-9) slowest = std::max(slowest, lambda.real());
  }
  return -slowest;
}

}  // namespace wqed
