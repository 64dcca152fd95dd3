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

#include "wqed/operators.hpp"

#include <array>
#include <cmath>

namespace wqed {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex phase(double angle) { return std::polar(1.0, angle); }

}  // namespace

VecOperator vec(const QOperator& m) { return Eigen::Map<const VecOperator>(m.data()); }

QOperator unvec(const VecOperator& v) { return Eigen::Map<const QOperator>(v.data()); }

Superoperator spre(const QOperator& a) { return kron(QOperator::Identity(), a); }

Superoperator spost(const QOperator& b) { return kron(b.transpose(), QOperator::Identity()); }

Superoperator sandwich(const QOperator& a, const QOperator& b) { return kron(b.transpose(), a); }

QOperator exchange_hamiltonian(const SystemParams& params) {
  const auto& s = spin_ops();
  const QOperator hop = params.j_mag * phase(params.theta) * s.sp_a * s.sm_b;
  return hop + hop.adjoint();
}

QOperator build_hamiltonian(const SystemParams& raw, const DriveAmplitudes& amplitudes) {
  const SystemParams params = raw.validated();
  const auto& s = spin_ops();
  const double k = params.k;
  const Complex e_phi = phase(params.phi);

  QOperator h = params.delta_a * s.sz_a + params.delta_b * s.sz_b + exchange_hamiltonian(params);

  // Raising part of the drive; the lowering part is its adjoint.
  const Complex on_a = kI * k * (amplitudes.forward + e_phi * amplitudes.backward);
  const Complex on_b = kI * k * (e_phi * amplitudes.forward + amplitudes.backward);
  const QOperator drive = on_a * s.sp_a + on_b * s.sp_b;
  h += drive + drive.adjoint();
  return h;
}

QOperator build_hamiltonian(const SystemParams& params, const Drive& drive) {
  return build_hamiltonian(params, DriveAmplitudes::from(drive));
}

JumpOperators jump_operators(double phi) {
  const auto& s = spin_ops();
  return {s.sm_a + phase(-phi) * s.sm_b, s.sm_a + phase(phi) * s.sm_b};
}

Superoperator lindblad_generator(const QOperator& hamiltonian, std::span<const DissipationChannel> channels) {
  Superoperator l = -kI * (spre(hamiltonian) - spost(hamiltonian));
  for (const auto& [op, rate] : channels) {
    const QOperator number = op.adjoint() * op;
    l += rate * (sandwich(op, op.adjoint()) - 0.5 * spre(number) - 0.5 * spost(number));
  }
  return l;
}

Superoperator build_liouvillian(const SystemParams& raw, const DriveAmplitudes& amplitudes) {
  const SystemParams params = raw.validated();
  const auto& s = spin_ops();
  const double gamma = params.gamma_wg;
  const QOperator h = build_hamiltonian(params, amplitudes);

  Superoperator l = -kI * (spre(h) - spost(h));

  // -(Gamma + gamma_i) (S+S- rho - 2 S- rho S+ + rho S+S-)
  const std::array<std::pair<const QOperator*, double>, 2> local = {
      std::pair{&s.sm_a, gamma + params.gamma_a}, std::pair{&s.sm_b, gamma + params.gamma_b}};
  for (const auto& [sm, rate] : local) {
    const QOperator sp = sm->adjoint();
    l -= rate * (spre(sp * *sm) - 2.0 * sandwich(*sm, sp) + spost(sp * *sm));
  }

  // -Gamma [e^{i phi} S_a^+ S_b^- rho - 2cos(phi) S_b^- rho S_a^+ + e^{-i phi} rho S_a^+ S_b^- + H.c.]
  const Complex e_phi = phase(params.phi);
  const Complex two_cos(2.0 * std::cos(params.phi), 0.0);
  const QOperator ab = s.sp_a * s.sm_b;
  const QOperator ba = s.sp_b * s.sm_a;
  const Superoperator cross = e_phi * spre(ab) - two_cos * sandwich(s.sm_b, s.sp_a) + std::conj(e_phi) * spost(ab);
  // (A rho B)^dagger = B^dagger rho A^dagger for Hermitian rho.
  const Superoperator cross_hc =
      std::conj(e_phi) * spost(ba) - two_cos * sandwich(s.sm_a, s.sp_b) + e_phi * spre(ba);
  l -= gamma * (cross + cross_hc);
  return l;
}

Superoperator build_liouvillian(const SystemParams& params, const Drive& drive) {
  return build_liouvillian(params, DriveAmplitudes::from(drive));
}

QOperator collective_lamb_shift(const SystemParams& params) {
  const auto& s = spin_ops();
  return params.gamma_wg * std::sin(params.phi) * (s.sp_a * s.sm_b + s.sp_b * s.sm_a);
}

Superoperator build_liouvillian_jump_form(const SystemParams& raw, const Drive& drive) {
  const SystemParams params = raw.validated();
  const auto& s = spin_ops();
  const QOperator h = build_hamiltonian(params, drive) + collective_lamb_shift(params);
  const JumpOperators c = jump_operators(params.phi);
  const std::array<DissipationChannel, 4> channels = {
      DissipationChannel{c.right, params.gamma_wg},
      DissipationChannel{c.left, params.gamma_wg},
      DissipationChannel{s.sm_a, 2.0 * params.gamma_a},
      DissipationChannel{s.sm_b, 2.0 * params.gamma_b},
  };
  return lindblad_generator(h, channels);
}

DirectionalCouplings directional_couplings(const SystemParams& raw) {
  const SystemParams params = raw.validated();
  const Complex waveguide = params.gamma_wg * phase(params.phi);
  DirectionalCouplings out;
  out.b_to_a = kI * params.j_mag * phase(params.theta) + waveguide;
  out.a_to_b = kI * params.j_mag * phase(-params.theta) + waveguide;
  out.imbalance = out.b_to_a - out.a_to_b;
  return out;
}

QOperator permutation_operator() {
  QOperator p = QOperator::Zero();
  p(kEE, kEE) = 1.0;
  p(kGG, kGG) = 1.0;
  p(kEG, kGE) = 1.0;
  p(kGE, kEG) = 1.0;
  return p;
}

DriveAmplitudes time_reversed_amplitudes(const DriveAmplitudes& in, double phi) {
  const Complex factor = -phase(-phi);
  return {factor * std::conj(in.backward), factor * std::conj(in.forward)};
}

}  // namespace wqed
