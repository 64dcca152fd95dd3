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

#include "wqed/model.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace wqed {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

SpinOperators make_spin_ops() {
  // Single-qubit basis {|e>, |g>}.
  Eigen::Matrix2cd lower = Eigen::Matrix2cd::Zero();
  lower(1, 0) = 1.0;  // |g><e|
  Eigen::Matrix2cd sz = Eigen::Matrix2cd::Zero();
  sz(0, 0) = 0.5;
  sz(1, 1) = -0.5;
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();

  SpinOperators ops;
  ops.sm_a = kron(lower, id);
  ops.sp_a = ops.sm_a.adjoint();
  ops.sz_a = kron(sz, id);
  ops.sm_b = kron(id, lower);
  ops.sp_b = ops.sm_b.adjoint();
  ops.sz_b = kron(id, sz);
  return ops;
}

}  // namespace

double wrap_angle(double angle) {
  double wrapped = std::fmod(angle, kTwoPi);
  if (wrapped < 0.0) wrapped += kTwoPi;
  if (wrapped >= kTwoPi) wrapped = 0.0;
  return wrapped;
}

SystemParams SystemParams::validated() const {
  require(std::isfinite(gamma_wg) && std::isfinite(gamma_a) && std::isfinite(gamma_b) &&
              std::isfinite(delta_a) && std::isfinite(delta_b) && std::isfinite(j_mag) &&
              std::isfinite(theta) && std::isfinite(phi) && std::isfinite(k),
          "SystemParams: all parameters must be finite");
  require(gamma_wg > 0.0, "SystemParams: gamma_wg must be positive");
  require(gamma_a >= 0.0 && gamma_b >= 0.0, "SystemParams: loss rates must be nonnegative");
  require(j_mag >= 0.0, "SystemParams: exchange magnitude J must be nonnegative");
  require(std::abs(k * k - gamma_wg) <= 1e-12 * gamma_wg, "SystemParams: k^2 must equal gamma_wg");
  SystemParams out = *this;
  out.theta = wrap_angle(theta);
  return out;
}

SystemParams& SystemParams::set_gamma_wg(double gamma) {
  gamma_wg = gamma;
  k = std::sqrt(gamma);
  return *this;
}

SystemParams& SystemParams::set_symmetric_detuning(double delta) {
  delta_a = delta;
  delta_b = delta;
  return *this;
}

SystemParams& SystemParams::set_antisymmetric_detuning(double delta) {
  delta_a = delta;
  delta_b = -delta;
  return *this;
}

std::string_view to_string(Port port) { return port == Port::Forward ? "forward" : "backward"; }

Drive Drive::from_power(Port port, double power) {
  require(std::isfinite(power) && power >= 0.0, "Drive: power must be finite and nonnegative");
  return Drive{port, std::sqrt(power)};
}

void Drive::validate() const {
  require(std::isfinite(alpha) && alpha >= 0.0, "Drive: alpha must be finite and nonnegative");
}

DriveAmplitudes DriveAmplitudes::from(const Drive& drive) {
  drive.validate();
  if (drive.port == Port::Forward) return {Complex(drive.alpha, 0.0), Complex(0.0, 0.0)};
  return {Complex(0.0, 0.0), Complex(drive.alpha, 0.0)};
}

const SpinOperators& spin_ops() {
  static const SpinOperators ops = make_spin_ops();
  return ops;
}

DensityMatrix::DensityMatrix() : rho_(QOperator::Zero()) { rho_(kGG, kGG) = 1.0; }

bool DensityDiagnostics::ok() const {
  return hermiticity_error <= DensityMatrix::kHermiticityTolerance &&
         trace_error <= DensityMatrix::kTraceTolerance &&
         min_eigenvalue >= -DensityMatrix::kPositivityTolerance;
}

DensityDiagnostics diagnose(const QOperator& m) {
  DensityDiagnostics d{};
  d.hermiticity_error = (m - m.adjoint()).cwiseAbs().maxCoeff();
  d.trace_error = std::abs(m.trace() - Complex(1.0, 0.0));
  const QOperator herm = 0.5 * (m + m.adjoint());
  d.min_eigenvalue = Eigen::SelfAdjointEigenSolver<QOperator>(herm, Eigen::EigenvaluesOnly).eigenvalues()(0);
  return d;
}

DensityMatrix DensityMatrix::checked(const QOperator& m) {
  if (!m.allFinite()) throw std::invalid_argument("DensityMatrix: non-finite entries");
  const DensityDiagnostics d = diagnose(m);
  if (!d.ok()) {
    std::ostringstream os;
    os << "DensityMatrix: invariant violated (hermiticity " << d.hermiticity_error << ", trace "
       << d.trace_error << ", min eigenvalue " << d.min_eigenvalue << ")";
    throw std::invalid_argument(os.str());
  }
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::normalized(const QOperator& m) {
  QOperator herm = 0.5 * (m + m.adjoint());
  const Complex tr = herm.trace();
  if (std::abs(tr) == 0.0) throw std::invalid_argument("DensityMatrix: zero trace cannot be normalized");
  herm /= tr.real();
  return checked(herm);
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  const double n = psi.norm();
  if (!(n > 0.0)) throw std::invalid_argument("DensityMatrix: zero state vector");
  const StateVector u = psi / n;
  return checked(u * u.adjoint());
}

DensityMatrix DensityMatrix::basis_state(BasisIndex index) {
  QOperator m = QOperator::Zero();
  m(index, index) = 1.0;
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::maximally_mixed() { return DensityMatrix(QOperator::Identity() / 4.0); }

double DensityMatrix::min_eigenvalue() const { return diagnose(rho_).min_eigenvalue; }

}  // namespace wqed
