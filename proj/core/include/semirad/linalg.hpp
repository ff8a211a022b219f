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

#ifndef SEMIRAD_LINALG_HPP
#define SEMIRAD_LINALG_HPP

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "semirad/errors.hpp"

namespace semirad {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kDefaultHermTol = 1e-8;
inline constexpr double kDefaultRankTol = 1e-10;

struct Tolerances {
  double herm_tol = kDefaultHermTol;
  double rank_tol = kDefaultRankTol;
};

namespace linalg {

/// Eigenvalues ascending, eigenvectors as the columns of a unitary matrix.
struct EigenDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Result of factoring a Hermitian positive semidefinite matrix.
struct PsdFactors {
  ComplexMatrix sqrt;
  ComplexMatrix pinv;
  ComplexMatrix sqrt_pinv;
  std::size_t rank = 0;
  /// Smallest retained eigenvalue; 0 when rank is 0.
  double min_pos_eig = 0.0;
  /// Full decomposition the factors were built from (ascending order).
  EigenDecomposition eig;
};

/// Throws NonFinite if any entry is NaN or infinite, and InvalidInput on an
/// empty matrix.
void require_finite(const ComplexMatrix& m);

void require_square(const ComplexMatrix& m);

/// Largest singular value.
double spectral_norm(const ComplexMatrix& m);

/// Spectral norm of m - m^*.
double hermitian_defect(const ComplexMatrix& m);

ComplexMatrix hermitian_part(const ComplexMatrix& m);

/// Eigendecomposition of a Hermitian matrix. The input is symmetrized as
/// (M + M^*)/2 after passing the asymmetry gate
/// ||M - M^*|| <= herm_tol (1 + ||M||).
EigenDecomposition hermitian_eig(const ComplexMatrix& m,
                                 double herm_tol = kDefaultHermTol);

/// Largest eigenvalue of a matrix already known to be Hermitian. No checks;
/// the hot path of the theta scans.
double max_eigenvalue_unchecked(const ComplexMatrix& h);

/// Square root, Moore-Penrose inverse and pseudo-inverse square root of a
/// Hermitian PSD matrix. Eigenvalues below rank_tol * max(lambda_max, 1) are
/// treated as zero.
PsdFactors psd_sqrt_and_pinv(const ComplexMatrix& m,
                             const Tolerances& tol = {});

/// Number of singular values above rank_tol * max(sigma_max, 1). Works on
/// rectangular input.
std::size_t numerical_rank(const ComplexMatrix& m, double rank_tol);

}  // namespace linalg
}  // namespace semirad

#endif  // SEMIRAD_LINALG_HPP
