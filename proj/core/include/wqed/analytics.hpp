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
#include <string_view>

#include "wqed/observables.hpp"
#include "wqed/operators.hpp"

namespace wqed {

// Closed-form results used to validate the solver and to locate
// transparency points.

enum class PureStateFamily {
  SymmetricLock,        ///< Delta_a = Delta_b = (-1)^n J cos(theta)
  AntisymmetricPinned,  ///< Delta_a = -Delta_b, theta in {pi/2, 3pi/2}
  TrivialGround,        ///< undriven, |gg>
  None,
};

std::string_view to_string(PureStateFamily family);

struct PureStateClassification {
  bool exists = false;
  PureStateFamily family = PureStateFamily::None;
  int n = 0;                          ///< phi = n pi
  std::optional<StateVector> state;   ///< normalized, annihilated by both jump operators
  double energy = 0.0;                ///< H|P> = E|P>
};

/// Absolute tolerance on phi = n pi and on the detuning relations.
inline constexpr double kPhaseMatchTolerance = 1e-12;

/// Dark single-excitation state (|eg> - (-1)^n |ge>)/sqrt(2).
StateVector dark_state(int n);
/// Bright partner (|eg> + (-1)^n |ge>)/sqrt(2).
StateVector bright_state(int n);

/// Decides whether the drive and parameters admit a pure steady state and
/// returns it.
PureStateClassification classify_pure_state(const SystemParams& params, const Drive& drive);

/// 2k^2 alpha^2 / (2k^2 alpha^2 + J^2 -+ Delta^2), minus for the symmetric
/// lock and plus for the antisymmetric family. Throws std::domain_error when
/// no pure state exists.
double closed_form_concurrence(const SystemParams& params, const Drive& drive);

/// Transmission without exchange at phi = pi and equal detunings delta:
///   (D^4 + k^4 (3a^4 + D^2) + 4 a^2 D^2 k^2)
///   / (D^4 + 4k^8 + 3a^4 k^4 + 5 D^2 k^4 + 4 a^2 k^2 (D^2 + k^4))
/// with a = alpha, D = delta. Multiplying by a^2 gives the transmitted flux. The detunings stored in params are ignored.
/// Throws std::invalid_argument unless J = 0 and phi = pi (mod 2pi).
double analytic_T_j0(double delta, const SystemParams& params, const Drive& drive);

/// Linear-response coherent transmission (identical for both ports).
double weak_drive_tc(const SystemParams& params);

struct SymmetryReport {
  bool permutation_applicable = false;  ///< Delta_a = Delta_b and gamma_a = gamma_b
  /// max |conj(H(theta; in)) - H(-theta; time-reversed in)|
  double time_reversal_residual = 0.0;
  /// same identity with the bare port swap eps -> (eps_2^*, eps_1^*); exact only at phi = pi
  double time_reversal_literal_residual = 0.0;
  /// max |conj(H_exch) - H_exch|, zero only for sin(theta) = 0
  double exchange_time_reversal_breaking = 0.0;
  /// max |P H(theta; drive) P - H(-theta; mirrored drive)|
  double permutation_hamiltonian_residual = 0.0;
  /// trace distance between rho_mirrored(-theta) and P rho(theta) P
  double permutation_state_distance = 0.0;
  double transmission_gap = 0.0;          ///< |T(theta) - T_mirrored(-theta)|
  double coherent_transmission_gap = 0.0;  ///< |T_c(theta) - T_c_mirrored(-theta)|
  double amplitude_gap = 0.0;              ///< |<eps_T>(theta) - <eps_T>_mirrored(-theta)|

  /// Largest of the residuals that must vanish for these parameters.
  double worst() const;
};

/// Checks the conjugation and qubit/port-exchange identities at one
/// parameter point. Permutation entries stay zero when not applicable.
SymmetryReport verify_symmetries(const SystemParams& params, const Drive& drive);

}  // namespace wqed
