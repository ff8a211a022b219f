/*
   Copyright 2026 The semirad Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "semirad/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace semirad::linalg {

namespace {

RealVector singular_values(const ComplexMatrix& m) {
  Eigen::BDCSVD<ComplexMatrix> svd(m);
  RealVector s = svd.singularValues();
  if (!s.allFinite()) {
    throw Error(ErrorCode::NumericalFailure, "singular value decomposition did not converge");
  }
  return s;
}

}  // namespace

void require_finite(const ComplexMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw Error(ErrorCode::InvalidInput, "matrix must have at least one row and one column");
  }
  if (!m.allFinite()) {
    throw Error(ErrorCode::NonFinite, "matrix has NaN or infinite entries");
  }
}

void require_square(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << "matrix is " << m.rows() << "x" << m.cols() << ", expected square";
    throw Error(ErrorCode::NotSquare, os.str());
  }
}

double spectral_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  const RealVector s = singular_values(m);
  return s.size() == 0 ? 0.0 : s(0);
}

double hermitian_defect(const ComplexMatrix& m) {
  return spectral_norm(m - m.adjoint());
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  return 0.5 * (m + m.adjoint());
}

EigenDecomposition hermitian_eig(const ComplexMatrix& m, double herm_tol) {
  require_finite(m);
  require_square(m);
  const double defect = hermitian_defect(m);
  const double scale = 1.0 + spectral_norm(m);
  if (defect > herm_tol * scale) {
    std::ostringstream os;
    os << "matrix is not Hermitian: ||M - M*|| = " << defect << " exceeds "
       << herm_tol << " * (1 + ||M||)";
    throw Error(ErrorCode::NotHermitian, os.str());
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(m));
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NumericalFailure, "Hermitian eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double max_eigenvalue_unchecked(const ComplexMatrix& h) {
  if (h.rows() == 1) return h(0, 0).real();
  if (h.rows() == 2) {
    // closed form keeps the 2x2 scans cheap
    const double a = h(0, 0).real();
    const double d = h(1, 1).real();
    const double b = std::abs(h(0, 1));
    return 0.5 * (a + d) + std::hypot(0.5 * (a - d), b);
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NumericalFailure, "Hermitian eigensolver did not converge");
  }
  return solver.eigenvalues()(h.rows() - 1);
}

PsdFactors psd_sqrt_and_pinv(const ComplexMatrix& m, const Tolerances& tol) {
  PsdFactors out;
  out.eig = hermitian_eig(m, tol.herm_tol);
  const RealVector& lambda = out.eig.eigenvalues;
  const ComplexMatrix& v = out.eig.eigenvectors;
  const Eigen::Index n = lambda.size();

  const double lambda_max = lambda(n - 1);
  const double magnitude = std::max(std::abs(lambda(0)), std::abs(lambda_max));
  if (lambda(0) < -tol.rank_tol * magnitude) {
    std::ostringstream os;
    os << "matrix is not positive semidefinite: smallest eigenvalue " << lambda(0);
    throw Error(ErrorCode::NotPSD, os.str());
  }

  const double cutoff = tol.rank_tol * std::max(lambda_max, 1.0);
  RealVector root = RealVector::Zero(n);
  RealVector inv = RealVector::Zero(n);
  RealVector inv_root = RealVector::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (lambda(i) > cutoff) {
      root(i) = std::sqrt(lambda(i));
      inv(i) = 1.0 / lambda(i);
      inv_root(i) = 1.0 / root(i);
      if (out.rank == 0) out.min_pos_eig = lambda(i);
      ++out.rank;
    }
  }
  out.sqrt = v * root.asDiagonal() * v.adjoint();
  out.pinv = v * inv.asDiagonal() * v.adjoint();
  out.sqrt_pinv = v * inv_root.asDiagonal() * v.adjoint();
  return out;
}

std::size_t numerical_rank(const ComplexMatrix& m, double rank_tol) {
  if (m.size() == 0) return 0;
  const RealVector s = singular_values(m);
  const double cutoff = rank_tol * std::max(s(0), 1.0);
  return static_cast<std::size_t>((s.array() > cutoff).count());
}

}  // namespace semirad::linalg
