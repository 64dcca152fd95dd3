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

#include <span>

#include "wqed/model.hpp"

namespace wqed {

/// Generator acting on column-stacked density matrices:
/// vec(rho)[i + 4 j] = rho(i, j), and vec(A rho B) = (B^T kron A) vec(rho).
using Superoperator = Eigen::Matrix<Complex, 16, 16>;
using VecOperator = Eigen::Matrix<Complex, 16, 1>;

VecOperator vec(const QOperator& m);
QOperator unvec(const VecOperator& v);

/// rho -> A rho
Superoperator spre(const QOperator& a);
/// rho -> rho B
Superoperator spost(const QOperator& b);
/// rho -> A rho B
Superoperator sandwich(const QOperator& a, const QOperator& b);

/// Driven two-qubit Hamiltonian in the frame rotating at the drive frequency.
QOperator build_hamiltonian(const SystemParams& params, const Drive& drive);
/// Same, with arbitrary complex amplitudes on both input ports.
QOperator build_hamiltonian(const SystemParams& params, const DriveAmplitudes& amplitudes);

/// The exchange part J e^{i theta} S_a^+ S_b^- + h.c. alone.
QOperator exchange_hamiltonian(const SystemParams& params);

struct JumpOperators {
  QOperator right;  ///< S_a^- + e^{-i phi} S_b^-
  QOperator left;   ///< S_a^- + e^{+i phi} S_b^-
};

JumpOperators jump_operators(double phi);

/// A collapse channel with standard normalization
/// rate * (c rho c^dagger - {c^dagger c, rho} / 2).
struct DissipationChannel {
  QOperator op;
  double rate;
};

/// -i[H, .] plus the given standard-form dissipators.
Superoperator lindblad_generator(const QOperator& hamiltonian, std::span<const DissipationChannel> channels);

/// Master-equation generator assembled term by term from the
/// (S+S-rho - 2 S-rho S+ + rho S+S-) local form plus the phase-dependent
/// cross terms between the qubits.
Superoperator build_liouvillian(const SystemParams& params, const Drive& drive);
Superoperator build_liouvillian(const SystemParams& params, const DriveAmplitudes& amplitudes);

/// The same generator written with the two directional jump operators:
///   -i[H + Gamma sin(phi) (S_a^+ S_b^- + S_b^+ S_a^-), .]
///   + Gamma L[c_right] + Gamma L[c_left] + 2 gamma_a L[S_a^-] + 2 gamma_b L[S_b^-].
/// Equal to build_liouvillian entrywise up to rounding.
Superoperator build_liouvillian_jump_form(const SystemParams& params, const Drive& drive);

/// Coherent correction Gamma sin(phi) (S_a^+ S_b^- + S_b^+ S_a^-) that the jump
/// form adds to H.
QOperator collective_lamb_shift(const SystemParams& params);

struct DirectionalCouplings {
  Complex a_to_b;     ///< i J e^{-i theta} + Gamma e^{i phi}
  Complex b_to_a;     ///< i J e^{+i theta} + Gamma e^{i phi}
  Complex imbalance;  ///< b_to_a - a_to_b = -2 J sin(theta)
};

DirectionalCouplings directional_couplings(const SystemParams& params);

/// Swaps qubits a and b: |eg> <-> |ge>, fixes |ee> and |gg>.
QOperator permutation_operator();

/// Port amplitudes that make conj(H(theta; in)) == H(-theta; out) an exact
/// matrix identity: out = (-e^{-i phi} in.backward^*, -e^{-i phi} in.forward^*).
/// At phi = pi this reduces to plain conjugation plus port exchange.
DriveAmplitudes time_reversed_amplitudes(const DriveAmplitudes& in, double phi);

}  // namespace wqed
