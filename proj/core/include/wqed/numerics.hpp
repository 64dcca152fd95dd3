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

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace wqed {

using Complex = std::complex<double>;

/// Dense complex matrix. All matrices in this library are at most 16x16.
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Raised when an iterative numerical procedure fails to converge or a
/// result cannot be certified to the requested residual.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Relative tolerance used to decide whether a singular value is zero.
inline constexpr double kDefaultKernelTolerance = 1e-9;

/// Relative residual every eigenpair returned by eig_general satisfies.
inline constexpr double kEigenResidualTolerance = 1e-10;

/// Kronecker product; the left factor indexes the slow (outer) block.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Orthonormal basis of the kernel of a square matrix.
///
/// A direction counts as part of the kernel when its singular value is at
/// most `tol * ||m||_2`, so every returned v satisfies ||m v|| <= tol ||m||.
/// A zero matrix has the whole space as kernel. Throws std::invalid_argument
/// for tol <= 0 or a non-square input.
std::vector<CVector> null_space(const CMatrix& m, double tol = kDefaultKernelTolerance);

/// Singular values in nonincreasing order.
Eigen::VectorXd singular_values(const CMatrix& m);

/// All eigenvalues (with multiplicity) of a square matrix of size <= 16.
///
/// Each eigenpair is certified: ||m v - lambda v|| <= 1e-10 ||m|| for a unit
/// eigenvector v. Throws ConvergenceError when the QR iteration does not
/// converge or a pair fails certification.
std::vector<Complex> eig_general(const CMatrix& m);

/// Solves m x = rhs with full pivoting. Throws std::domain_error if m is
/// numerically singular.
CVector solve(const CMatrix& m, const CVector& rhs);

/// Spectral norm (largest singular value).
double operator_norm(const CMatrix& m);

/// True when every entry is finite.
bool all_finite(const CMatrix& m);

}  // namespace wqed
