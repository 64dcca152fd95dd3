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

#include "wqed/numerics.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

namespace wqed {

namespace {

constexpr Eigen::Index kMaxDimension = 16;

void require_square(const CMatrix& m, const char* where) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream os;
    os << where << ": expected a nonempty square matrix, got " << m.rows() << "x" << m.cols();
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Eigen::VectorXd singular_values(const CMatrix& m) {
  return Eigen::JacobiSVD<CMatrix>(m).singularValues();
}

double operator_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return singular_values(m)(0);
}

bool all_finite(const CMatrix& m) { return m.allFinite(); }

std::vector<CVector> null_space(const CMatrix& m, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("null_space: tolerance must be positive");
  require_square(m, "null_space");

  const Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const double norm = sigma(0);
  const CMatrix& v = svd.matrixV();

  std::vector<CVector> kernel;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) <= tol * norm) kernel.emplace_back(v.col(i));
  }
  return kernel;
}

std::vector<Complex> eig_general(const CMatrix& m) {
  require_square(m, "eig_general");
  if (m.rows() > kMaxDimension) throw std::invalid_argument("eig_general: matrices larger than 16x16 are not supported");

  const Eigen::ComplexEigenSolver<CMatrix> solver(m, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("eig_general: QR iteration did not converge", std::nan(""));
  }

  const double norm = operator_norm(m);
  const double bound = kEigenResidualTolerance * std::max(norm, std::numeric_limits<double>::min());
  std::vector<Complex> values(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const Complex lambda = solver.eigenvalues()(i);
    CVector v = solver.eigenvectors().col(i);
    v.normalize();
    const double residual = (m * v - lambda * v).norm();
    if (residual > bound && norm > 0.0) {
      std::ostringstream os;
      os << "eig_general: eigenpair " << i << " failed certification (residual " << residual << ")";
      throw ConvergenceError(os.str(), residual);
    }
    values[static_cast<std::size_t>(i)] = lambda;
  }
  return values;
}

CVector solve(const CMatrix& m, const CVector& rhs) {
  require_square(m, "solve");
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  const Eigen::FullPivLU<CMatrix> lu(m);
  if (!lu.isInvertible()) throw std::domain_error("solve: matrix is numerically singular");
  return lu.solve(rhs);
}

}  // namespace wqed
