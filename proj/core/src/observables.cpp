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

#include "wqed/observables.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace wqed {

namespace {

constexpr double kEmptyChannelThreshold = 1e-12;
constexpr double kImaginaryLeakage = 1e-6;

double expectation_real(const DensityMatrix& rho, const QOperator& op) { return (rho.matrix() * op).trace().real(); }

}  // namespace

std::string_view to_string(Channel channel) { return channel == Channel::Transmit ? "transmit" : "reflect"; }

QOperator output_field_operator(const SystemParams& raw, const Drive& drive, Channel channel) {
  const SystemParams params = raw.validated();
  drive.validate();
  const auto& s = spin_ops();
  const Complex e_phi = std::polar(1.0, params.phi);

  // Collective lowering operators seen by the two output ports.
  const QOperator to_port2 = e_phi * s.sm_a + s.sm_b;  // right-going output
  const QOperator to_port1 = s.sm_a + e_phi * s.sm_b;  // left-going output

  const bool forward = drive.port == Port::Forward;
  const bool right_going = (channel == Channel::Transmit) == forward;
  QOperator field = -params.k * (right_going ? to_port2 : to_port1);
  if (channel == Channel::Transmit) field += e_phi * drive.alpha * QOperator::Identity();
  return field;
}

Complex output_amplitude(const DensityMatrix& rho, const SystemParams& params, const Drive& drive, Channel channel) {
  return (rho.matrix() * output_field_operator(params, drive, channel)).trace();
}

PortIntensities port_intensities(const DensityMatrix& rho, const SystemParams& params, const Drive& drive) {
  const double p = drive.power();
  if (!(p > 0.0)) throw std::domain_error("p=0 normalization undefined");

  PortIntensities out;
  const auto fill = [&](Channel channel, double& total, double& coherent, double& incoherent) {
    const QOperator e = output_field_operator(params, drive, channel);
    total = expectation_real(rho, e.adjoint() * e) / p;
    coherent = std::norm((rho.matrix() * e).trace()) / p;
    incoherent = total - coherent;
  };
  fill(Channel::Transmit, out.T, out.T_c, out.T_inc);
  fill(Channel::Reflect, out.R, out.R_c, out.R_inc);
  return out;
}

double purity(const DensityMatrix& rho) { return (rho.matrix() * rho.matrix()).trace().real(); }

const QOperator& spin_flip_operator() {
  static const QOperator yy = [] {
    Eigen::Matrix2cd sy;
    sy << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
    return QOperator(kron(sy, sy));
  }();
  return yy;
}

double concurrence(const DensityMatrix& rho) {
  const QOperator& yy = spin_flip_operator();
  const QOperator flipped = yy * rho.matrix().conjugate() * yy;
  const std::vector<Complex> spectrum = eig_general(rho.matrix() * flipped);

  std::array<double, 4> lambda{};
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    if (std::abs(spectrum[i].imag()) > kImaginaryLeakage) {
      std::ostringstream os;
      os << "concurrence: eigenvalue " << spectrum[i] << " of rho*rho_tilde is not real; invalid density matrix";
      throw std::domain_error(os.str());
    }
    lambda[i] = std::sqrt(std::max(0.0, spectrum[i].real()));
  }
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double g2_zero(const DensityMatrix& rho, const SystemParams& params, const Drive& drive, Channel channel) {
  const QOperator e = output_field_operator(params, drive, channel);
  const QOperator ed = e.adjoint();
  const double intensity = expectation_real(rho, ed * e);
  if (!(intensity > kEmptyChannelThreshold)) {
    std::ostringstream os;
    os << "g2: empty " << to_string(channel) << " channel (intensity " << intensity << ")";
    throw EmptyChannelError(os.str());
  }
  return expectation_real(rho, ed * ed * e * e) / (intensity * intensity);
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  const QOperator diff = a.matrix() - b.matrix();
  const QOperator herm = 0.5 * (diff + diff.adjoint());
  return 0.5 * Eigen::SelfAdjointEigenSolver<QOperator>(herm, Eigen::EigenvaluesOnly).eigenvalues().cwiseAbs().sum();
}

}  // namespace wqed
