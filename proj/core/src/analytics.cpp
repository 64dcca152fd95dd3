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

#include "wqed/analytics.hpp"

#include <algorithm>
#include <cmath>

#include "wqed/steady.hpp"

namespace wqed {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

// Nearest integer n with |phi - n pi| <= tolerance, if any.
std::optional<int> phase_matched_order(double phi) {
  const double n = std::round(phi / kPi);
  if (std::abs(phi - n * kPi) > kPhaseMatchTolerance) return std::nullopt;
  return static_cast<int>(n);
}

bool is_odd(int n) { return (n % 2) != 0; }

double max_abs(const QOperator& m) { return m.cwiseAbs().maxCoeff(); }

Drive mirrored(const Drive& drive) {
  return Drive{drive.port == Port::Forward ? Port::Backward : Port::Forward, drive.alpha};
}

}  // namespace

std::string_view to_string(PureStateFamily family) {
  switch (family) {
    case PureStateFamily::SymmetricLock: return "symmetric-lock";
    case PureStateFamily::AntisymmetricPinned: return "antisymmetric-pinned";
    case PureStateFamily::TrivialGround: return "trivial-ground";
    case PureStateFamily::None: break;
  }
  return "none";
}

StateVector dark_state(int n) {
  StateVector v = StateVector::Zero();
  v(kEG) = 1.0 / kSqrt2;
  v(kGE) = (is_odd(n) ? 1.0 : -1.0) / kSqrt2;
  return v;
}

StateVector bright_state(int n) {
  StateVector v = StateVector::Zero();
  v(kEG) = 1.0 / kSqrt2;
  v(kGE) = (is_odd(n) ? -1.0 : 1.0) / kSqrt2;
  return v;
}

PureStateClassification classify_pure_state(const SystemParams& raw, const Drive& drive) {
  const SystemParams params = raw.validated();
  drive.validate();

  PureStateClassification out;
  StateVector ground = StateVector::Zero();
  ground(kGG) = 1.0;

  if (drive.alpha == 0.0) {
    out.exists = true;
    out.family = PureStateFamily::TrivialGround;
    out.state = ground;
    out.energy = -0.5 * (params.delta_a + params.delta_b);
    return out;
  }

  const std::optional<int> order = phase_matched_order(params.phi);
  if (!order) return out;
  const int n = *order;
  const double sign = is_odd(n) ? -1.0 : 1.0;

  // Backward drive excites the bright state with an extra factor (-1)^n.
  const double alpha = drive.port == Port::Forward ? drive.alpha : sign * drive.alpha;
  const double j_sin = sign * params.j_mag * std::sin(params.theta);
  const double j_cos = sign * params.j_mag * std::cos(params.theta);
  const double scale = std::max(1.0, params.j_mag);
  const double tol = kPhaseMatchTolerance * scale;

  const StateVector dark = dark_state(n);
  const double dark_weight = kSqrt2 * params.k * alpha;

  const double delta = params.delta_a;
  const bool symmetric = std::abs(params.delta_a - params.delta_b) <= tol;
  const bool antisymmetric = std::abs(params.delta_a + params.delta_b) <= tol;

  if (symmetric && std::abs(delta - j_cos) <= tol && std::abs(j_sin) > tol) {
    StateVector p = dark_weight * dark + j_sin * ground;
    out.exists = true;
    out.family = PureStateFamily::SymmetricLock;
    out.n = n;
    out.state = p.normalized();
    out.energy = -delta;
    return out;
  }
  if (antisymmetric && params.j_mag > tol && std::abs(std::cos(params.theta)) <= kPhaseMatchTolerance) {
    StateVector p = dark_weight * dark + Complex(j_sin, delta) * ground;
    out.exists = true;
    out.family = PureStateFamily::AntisymmetricPinned;
    out.n = n;
    out.state = p.normalized();
    out.energy = 0.0;
    return out;
  }
  return out;
}

double closed_form_concurrence(const SystemParams& raw, const Drive& drive) {
  const SystemParams params = raw.validated();
  const PureStateClassification c = classify_pure_state(params, drive);
  if (!c.exists) throw std::domain_error("closed_form_concurrence: no pure steady state at these parameters");

  const double drive_term = 2.0 * params.gamma_wg * drive.power();
  const double j2 = params.j_mag * params.j_mag;
  const double d2 = params.delta_a * params.delta_a;
  switch (c.family) {
    case PureStateFamily::SymmetricLock: return drive_term / (drive_term + j2 - d2);
    case PureStateFamily::AntisymmetricPinned: return drive_term / (drive_term + j2 + d2);
    default: return 0.0;
  }
}

double analytic_T_j0(double delta, const SystemParams& raw, const Drive& drive) {
  const SystemParams params = raw.validated();
  drive.validate();
  if (params.j_mag != 0.0) throw std::invalid_argument("analytic_T_j0: requires J = 0");
  if (std::abs(wrap_angle(params.phi) - kPi) > kPhaseMatchTolerance) {
    throw std::invalid_argument("analytic_T_j0: requires phi = pi");
  }
  const double a2 = drive.power();
  const double a4 = a2 * a2;
  const double k2 = params.k * params.k;
  const double k4 = k2 * k2;
  const double d2 = delta * delta;
  const double d4 = d2 * d2;
  const double num = d4 + k4 * (3.0 * a4 + d2) + 4.0 * a2 * d2 * k2;
  const double den = d4 + 4.0 * k4 * k4 + 3.0 * a4 * k4 + 5.0 * d2 * k4 + 4.0 * a2 * k2 * (d2 + k4);
  return num / den;
}

double weak_drive_tc(const SystemParams& raw) {
  const SystemParams p = raw.validated();
  const Complex i(0.0, 1.0);
  const double g = p.gamma_wg;
  const double j = p.j_mag;
  const Complex num = -j * j - 2.0 * j * g * std::polar(1.0, -p.theta) * std::sin(p.phi) + p.delta_a * p.delta_b;
  const Complex den = -j * j + 2.0 * i * g * j * std::polar(1.0, p.phi) * std::cos(p.theta) +
                      g * g * std::polar(1.0, 2.0 * p.phi) - (g + i * p.delta_a) * (g + i * p.delta_b);
  return std::norm(num) / std::norm(den);
}

double SymmetryReport::worst() const {
  double w = time_reversal_residual;
  if (permutation_applicable) {
    w = std::max({w, permutation_hamiltonian_residual, permutation_state_distance, transmission_gap,
                  coherent_transmission_gap, amplitude_gap});
  }
  return w;
}

SymmetryReport verify_symmetries(const SystemParams& raw, const Drive& drive) {
  const SystemParams params = raw.validated();
  drive.validate();
  SystemParams reversed = params;
  reversed.theta = wrap_angle(-params.theta);
  const Drive other = mirrored(drive);

  SymmetryReport report;

  const DriveAmplitudes in = DriveAmplitudes::from(drive);
  const QOperator h = build_hamiltonian(params, in);
  report.time_reversal_residual =
      max_abs(h.conjugate() - build_hamiltonian(reversed, time_reversed_amplitudes(in, params.phi)));
  const DriveAmplitudes literal{std::conj(in.backward), std::conj(in.forward)};
  report.time_reversal_literal_residual = max_abs(h.conjugate() - build_hamiltonian(reversed, literal));
  const QOperator exchange = exchange_hamiltonian(params);
  report.exchange_time_reversal_breaking = max_abs(exchange.conjugate() - exchange);

  report.permutation_applicable = std::abs(params.delta_a - params.delta_b) <= kPhaseMatchTolerance &&
                                  std::abs(params.gamma_a - params.gamma_b) <= kPhaseMatchTolerance;
  if (!report.permutation_applicable) return report;

  const QOperator swap = permutation_operator();
  report.permutation_hamiltonian_residual =
      max_abs(swap * h * swap - build_hamiltonian(reversed, other));

  const DensityMatrix rho = steady_state(build_liouvillian(params, drive)).rho;
  const DensityMatrix rho_mirror = steady_state(build_liouvillian(reversed, other)).rho;
  report.permutation_state_distance =
      trace_distance(rho_mirror, DensityMatrix::normalized(swap * rho.matrix() * swap));

  if (drive.power() > 0.0) {
    const PortIntensities a = port_intensities(rho, params, drive);
    const PortIntensities b = port_intensities(rho_mirror, reversed, other);
    report.transmission_gap = std::abs(a.T - b.T);
    report.coherent_transmission_gap = std::abs(a.T_c - b.T_c);
    report.amplitude_gap = std::abs(output_amplitude(rho, params, drive, Channel::Transmit) -
                                    output_amplitude(rho_mirror, reversed, other, Channel::Transmit));
  }
  return report;
}

}  // namespace wqed
