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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "wqed/model.hpp"

namespace wqed {
namespace {

StateVector basis(BasisIndex i) {
  StateVector v = StateVector::Zero();
  v(i) = 1.0;
  return v;
}

TEST(SpinOps, LoweringAction) {
  const SpinOperators& s = spin_ops();
  EXPECT_TRUE((s.sm_a * basis(kEE)).isApprox(basis(kGE)));
  EXPECT_TRUE((s.sm_a * basis(kGE)).isZero());
  EXPECT_TRUE((s.sm_b * basis(kEE)).isApprox(basis(kEG)));
  EXPECT_TRUE((s.sm_b * basis(kEG)).isZero());
}

TEST(SpinOps, MatchHandBuiltMatrices) {
  const SpinOperators& s = spin_ops();
  EXPECT_EQ(s.sm_a, oracle::lower_a());
  EXPECT_EQ(s.sm_b, oracle::lower_b());
  EXPECT_EQ(s.sz_a, oracle::sz_a());
  EXPECT_EQ(s.sz_b, oracle::sz_b());
}

TEST(SpinOps, Algebra) {
  const SpinOperators& s = spin_ops();
  for (const auto& [sp, sm, sz] : {std::tuple{s.sp_a, s.sm_a, s.sz_a}, std::tuple{s.sp_b, s.sm_b, s.sz_b}}) {
    EXPECT_LT((sp * sm - sm * sp - 2.0 * sz).norm(), 1e-14);
    EXPECT_LT((sz * sp - sp * sz - sp).norm(), 1e-14);
    EXPECT_LT((sm * sm).norm(), 1e-14);
    EXPECT_EQ(sp, sm.adjoint());
  }
  // Operators on different qubits commute.
  EXPECT_LT((s.sp_a * s.sm_b - s.sm_b * s.sp_a).norm(), 1e-14);
}

TEST(SpinOps, CollectiveLoweringIsNilpotent) {
  const SpinOperators& s = spin_ops();
  for (double phi : {0.0, 0.3, kPi / 2.0, 2.0}) {
    const QOperator c = s.sm_a + std::polar(1.0, phi) * s.sm_b;
    EXPECT_LT((c * c * c).norm(), 1e-14);
  }
}

TEST(BasisOrder, Labels) {
  EXPECT_EQ(kBasisLabels[kEE], "ee");
  EXPECT_EQ(kBasisLabels[kEG], "eg");
  EXPECT_EQ(kBasisLabels[kGE], "ge");
  EXPECT_EQ(kBasisLabels[kGG], "gg");
}

TEST(WrapAngle, IntoHalfOpenTurn) {
  EXPECT_DOUBLE_EQ(wrap_angle(0.0), 0.0);
  EXPECT_NEAR(wrap_angle(-kPi / 2.0), 3.0 * kPi / 2.0, 1e-15);
  EXPECT_NEAR(wrap_angle(5.0 * kPi), kPi, 1e-14);
  EXPECT_LT(wrap_angle(kTwoPi), kTwoPi);
  EXPECT_GE(wrap_angle(-1e-300), 0.0);
}

TEST(SystemParams, ValidatedWrapsTheta) {
  SystemParams p;
  p.theta = -kPi / 4.0;
  EXPECT_NEAR(p.validated().theta, 7.0 * kPi / 4.0, 1e-15);
}

TEST(SystemParams, RejectsInvalid) {
  SystemParams p;
  p.gamma_wg = 0.0;
  p.k = 0.0;
  EXPECT_THROW((void)p.validated(), std::invalid_argument);

  p = SystemParams{};
  p.j_mag = -0.1;
  EXPECT_THROW((void)p.validated(), std::invalid_argument);

  p = SystemParams{};
  p.gamma_a = -1e-3;
  EXPECT_THROW((void)p.validated(), std::invalid_argument);

  p = SystemParams{};
  p.delta_a = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW((void)p.validated(), std::invalid_argument);

  p = SystemParams{};
  p.phi = std::numeric_limits<double>::infinity();
  EXPECT_THROW((void)p.validated(), std::invalid_argument);
}

TEST(SystemParams, CouplingMustMatchRate) {
  SystemParams p;
  p.gamma_wg = 2.0;  // k still 1
  EXPECT_THROW((void)p.validated(), std::invalid_argument);
  p.set_gamma_wg(2.0);
  EXPECT_NO_THROW((void)p.validated());
  EXPECT_NEAR(p.k * p.k, 2.0, 1e-15);
  p.k *= 1.0 + 1e-10;
  EXPECT_THROW((void)p.validated(), std::invalid_argument);
}

TEST(SystemParams, DetuningHelpers) {
  SystemParams p;
  p.set_symmetric_detuning(0.7);
  EXPECT_EQ(p.delta_a, 0.7);
  EXPECT_EQ(p.delta_b, 0.7);
  p.set_antisymmetric_detuning(0.7);
  EXPECT_EQ(p.delta_a, 0.7);
  EXPECT_EQ(p.delta_b, -0.7);
}

TEST(Drive, PowerIsAlphaSquared) {
  const Drive d = Drive::from_power(Port::Backward, 0.25);
  EXPECT_DOUBLE_EQ(d.alpha, 0.5);
  EXPECT_DOUBLE_EQ(d.power(), 0.25);
  EXPECT_THROW(Drive::from_power(Port::Forward, -1.0), std::invalid_argument);
  EXPECT_THROW((Drive{Port::Forward, -0.1}.validate()), std::invalid_argument);
}

TEST(Drive, AmplitudesAreSingleSided) {
  const DriveAmplitudes f = DriveAmplitudes::from(Drive{Port::Forward, 0.3});
  EXPECT_EQ(f.forward, Complex(0.3));
  EXPECT_EQ(f.backward, Complex(0.0));
  const DriveAmplitudes b = DriveAmplitudes::from(Drive{Port::Backward, 0.3});
  EXPECT_EQ(b.forward, Complex(0.0));
  EXPECT_EQ(b.backward, Complex(0.3));
  EXPECT_EQ(to_string(Port::Forward), "forward");
  EXPECT_EQ(to_string(Port::Backward), "backward");
}

TEST(DensityMatrix, Factories) {
  EXPECT_EQ(DensityMatrix()(kGG, kGG), Complex(1.0));
  EXPECT_NEAR(DensityMatrix::maximally_mixed().matrix().trace().real(), 1.0, 1e-15);
  EXPECT_NEAR(DensityMatrix::maximally_mixed().min_eigenvalue(), 0.25, 1e-15);
  EXPECT_EQ(DensityMatrix::basis_state(kEG)(kEG, kEG), Complex(1.0));

  const DensityMatrix bell = DensityMatrix::pure(basis(kEG) + basis(kGE));
  EXPECT_NEAR(bell(kEG, kGE).real(), 0.5, 1e-15);
  EXPECT_THROW(DensityMatrix::pure(StateVector::Zero()), std::invalid_argument);
}

TEST(DensityMatrix, CheckedRejectsInvalid) {
  QOperator m = QOperator::Zero();
  m(0, 0) = 0.5;
  EXPECT_THROW(DensityMatrix::checked(m), std::invalid_argument);  // trace 0.5
  m(3, 3) = 0.5;
  EXPECT_NO_THROW(DensityMatrix::checked(m));
  m(0, 1) = 0.1;
  EXPECT_THROW(DensityMatrix::checked(m), std::invalid_argument);  // not Hermitian
  QOperator neg = QOperator::Zero();
  neg(0, 0) = 1.5;
  neg(3, 3) = -0.5;
  EXPECT_THROW(DensityMatrix::checked(neg), std::invalid_argument);  // not positive
}

TEST(DensityMatrix, NormalizedRepairsRoundoff) {
  std::mt19937_64 rng(1);
  const QOperator rho = oracle::random_density(rng);
  QOperator noisy = 3.0 * rho;
  noisy(0, 1) += Complex(1e-12, 0.0);
  const DensityMatrix fixed = DensityMatrix::normalized(noisy);
  const DensityDiagnostics d = diagnose(fixed.matrix());
  EXPECT_TRUE(d.ok());
  EXPECT_LT(d.hermiticity_error, 1e-15);
  EXPECT_LT(d.trace_error, 1e-14);
  EXPECT_THROW(DensityMatrix::normalized(QOperator::Zero()), std::invalid_argument);
}

}  // namespace
}  // namespace wqed
