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

#include <array>
#include <numbers>
#include <string_view>

#include "wqed/numerics.hpp"

namespace wqed {

/// Operator on the two-qubit space, basis order {|ee>, |eg>, |ge>, |gg>}.
/// Qubit a is the left tensor factor.
using QOperator = Eigen::Matrix4cd;
using StateVector = Eigen::Vector4cd;

/// Positions of the product states in every 4-dimensional vector and
/// 4x4 matrix of the library.
enum BasisIndex : int { kEE = 0, kEG = 1, kGE = 2, kGG = 3 };
inline constexpr std::array<std::string_view, 4> kBasisLabels = {"ee", "eg", "ge", "gg"};

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Wraps an angle into [0, 2pi).
double wrap_angle(double angle);

/// Physical parameters of the two-qubit waveguide model. Rates, detunings
/// and J are in units of the waveguide decay rate; angles in radians.
struct SystemParams {
  double gamma_wg = 1.0;  ///< waveguide decay rate Gamma
  double gamma_a = 0.0;   ///< non-waveguide loss of qubit a
  double gamma_b = 0.0;
  double delta_a = 0.0;  ///< omega_a - omega_drive
  double delta_b = 0.0;
  double j_mag = 0.0;  ///< exchange magnitude J >= 0
  double theta = 0.0;  ///< phase of the complex exchange J e^{i theta}
  double phi = 0.0;    ///< propagation phase between the qubits
  double k = 1.0;      ///< waveguide coupling amplitude, k^2 = Gamma

  /// Returns a copy with theta wrapped into [0, 2pi) after checking every
  /// invariant. Throws std::invalid_argument on violation.
  [[nodiscard]] SystemParams validated() const;

  /// Sets Gamma and the matching coupling k = sqrt(Gamma).
  SystemParams& set_gamma_wg(double gamma);

  /// Symmetric detuning delta_a = delta_b = delta.
  SystemParams& set_symmetric_detuning(double delta);
  /// Antisymmetric detuning delta_a = -delta_b = delta.
  SystemParams& set_antisymmetric_detuning(double delta);
};

enum class Port {
  Forward,   ///< injected at port 1, right-going
  Backward,  ///< injected at port 2, left-going
};

std::string_view to_string(Port port);

/// Single-sided coherent drive with real amplitude alpha; the
/// counterpropagating input is always zero.
struct Drive {
  Port port = Port::Forward;
  double alpha = 0.0;

  double power() const { return alpha * alpha; }

  static Drive from_power(Port port, double power);
  void validate() const;
};

/// Complex amplitudes of both input ports. Only the symmetry checks need
/// general (two-sided, complex) inputs; the physics API uses Drive.
struct DriveAmplitudes {
  Complex forward{0.0, 0.0};   ///< epsilon_{1->}
  Complex backward{0.0, 0.0};  ///< epsilon_{2<-}

  static DriveAmplitudes from(const Drive& drive);
};

/// Single-qubit operators embedded in the two-qubit space.
struct SpinOperators {
  QOperator sz_a, sp_a, sm_a;
  QOperator sz_b, sp_b, sm_b;
};

/// The six spin-1/2 operators; S^z = (|e><e| - |g><g|)/2.
const SpinOperators& spin_ops();

/// Density matrix on the two-qubit space.
///
/// Construction through `checked` enforces Hermiticity (1e-10), unit trace
/// (1e-10) and a minimum eigenvalue >= -1e-8.
class DensityMatrix {
 public:
  static constexpr double kHermiticityTolerance = 1e-10;
  static constexpr double kTraceTolerance = 1e-10;
  static constexpr double kPositivityTolerance = 1e-8;

  /// |gg><gg|
  DensityMatrix();

  static DensityMatrix checked(const QOperator& m);
  /// Hermitizes (m + m^dagger)/2 and renormalizes the trace before checking.
  static DensityMatrix normalized(const QOperator& m);
  static DensityMatrix pure(const StateVector& psi);
  static DensityMatrix ground() { return DensityMatrix(); }
  static DensityMatrix basis_state(BasisIndex index);
  static DensityMatrix maximally_mixed();

  const QOperator& matrix() const { return rho_; }
  Complex operator()(int row, int col) const { return rho_(row, col); }

  double min_eigenvalue() const;

 private:
  explicit DensityMatrix(const QOperator& m) : rho_(m) {}
  QOperator rho_;
};

/// Invariant diagnostics of an arbitrary 4x4 matrix read as a state.
struct DensityDiagnostics {
  double hermiticity_error;  ///< max |m - m^dagger|
  double trace_error;        ///< |Tr m - 1|
  double min_eigenvalue;     ///< of the Hermitian part

  bool ok() const;
};

DensityDiagnostics diagnose(const QOperator& m);

}  // namespace wqed
