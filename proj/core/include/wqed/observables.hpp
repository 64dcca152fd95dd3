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

#include <stdexcept>
#include <string_view>

#include "wqed/model.hpp"

namespace wqed {

enum class Channel { Transmit, Reflect };

std::string_view to_string(Channel channel);

/// Raised by g2_zero when the detected intensity is too small to normalize.
class EmptyChannelError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Output field of a detection port with vacuum inputs dropped.
///
/// Forward drive: transmit is epsilon_{2->} = e^{i phi} alpha - k (e^{i phi} S_a^- + S_b^-),
/// reflect is epsilon_{1<-} = -k (S_a^- + e^{i phi} S_b^-). Backward drive
/// mirrors the ports. The c-number part appears as alpha e^{i phi} times
/// the identity.
QOperator output_field_operator(const SystemParams& params, const Drive& drive, Channel channel);

/// Complex amplitude <epsilon> = Tr[rho E], propagation phase included.
Complex output_amplitude(const DensityMatrix& rho, const SystemParams& params, const Drive& drive, Channel channel);

/// Transmitted and reflected intensities normalized by the input power.
struct PortIntensities {
  double T = 0.0, T_c = 0.0, T_inc = 0.0;
  double R = 0.0, R_c = 0.0, R_inc = 0.0;
};

/// Throws std::domain_error when the drive power is zero.
PortIntensities port_intensities(const DensityMatrix& rho, const SystemParams& params, const Drive& drive);

/// Tr[rho^2].
double purity(const DensityMatrix& rho);

/// Wootters concurrence from the eigenvalues of rho * rho_tilde.
///
/// Eigenvalues with negative real part are clamped to zero. Throws
/// std::domain_error if any has |Im| > 1e-6, which cannot happen for a
/// valid state.
double concurrence(const DensityMatrix& rho);

/// sigma_y (x) sigma_y
const QOperator& spin_flip_operator();

/// Zero-delay second-order correlation Tr[rho E+E+EE] / (Tr[rho E+E])^2.
/// Throws EmptyChannelError when Tr[rho E+E] <= 1e-12.
double g2_zero(const DensityMatrix& rho, const SystemParams& params, const Drive& drive, Channel channel);

/// (1/2) ||a - b||_1
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace wqed
