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

#ifndef SEMIRAD_ARANGE_HPP
#define SEMIRAD_ARANGE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "semirad/semihilbert.hpp"

namespace semirad {

inline constexpr std::size_t kDefaultThetaGrid = 720;

struct RangeOptions {
  std::size_t theta_grid = kDefaultThetaGrid;
  /// Bracket width at which the golden-section refinement stops.
  double theta_tol = 1e-10;
};

struct RangeEstimate {
  /// w_A(T)
  double radius = 0.0;
  /// m_A(T)
  double crawford = 0.0;
  /// Support points of W_A(T), one per grid direction, in angular order.
  std::vector<Complex> boundary;
  std::size_t theta_grid = 0;
  bool refined = false;
  /// rank(A) = 0; every quantity is reported as 0.
  bool degenerate = false;
};

/// Scans the support function of W_A(T) on the grid, refines the radius by
/// golden section, and measures the Crawford number as the distance from the
/// origin to the hull of the support points.
RangeEstimate numerical_range(const SemiOperator& op, const RangeOptions& opt = {});

double a_numerical_radius(const SemiOperator& op, const RangeOptions& opt = {});
double a_crawford(const SemiOperator& op, const RangeOptions& opt = {});

/// Classical numerical radius of a square matrix by the same theta scan
/// (A = I).
double classical_numerical_radius(const ComplexMatrix& m, const RangeOptions& opt = {});

/// w_A computed along the other route: max over theta of
/// ||Re_A(e^{i theta} T)||_A, using A-adjoints and seminorms, followed by a
/// golden-section refinement of the best grid cell.
double w_theta_identity_check(const SemiOperator& op, std::size_t grid = kDefaultThetaGrid);

/// Largest |<Tx, x>_A| over samples random A-unit vectors drawn in range(A).
/// A lower estimate of w_A; deterministic for a given seed.
double sampled_radius(const SemiOperator& op, std::size_t samples, std::uint64_t seed);

/// Eigenvalues of a general square matrix, sorted by (real, imag). Every
/// pair passes ||M v - lambda v|| <= 1e-8 (1 + ||M||) or NumericalFailure is
/// thrown.
std::vector<Complex> general_eigenvalues(const ComplexMatrix& m);

struct InclusionReport {
  double max_violation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double radius = 0.0;
  std::vector<Complex> eigenvalues;
};

/// Distance of each eigenvalue of T to the computed W_A(T). Requires A > 0
/// (NotStrictlyPositive otherwise) unless allow_singular is set, in which
/// case the report simply shows the failure of the inclusion.
InclusionReport spectral_inclusion_check(const SemiOperator& op, const RangeOptions& opt = {},
                                         bool allow_singular = false);

}  // namespace semirad

#endif  // SEMIRAD_ARANGE_HPP
