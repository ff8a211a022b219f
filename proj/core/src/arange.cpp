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

#include "semirad/arange.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "semirad/geometry.hpp"
#include "semirad/optimize.hpp"

namespace semirad {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kMinGrid = 8;
constexpr std::size_t kRefineCandidates = 3;

Complex unit(double angle) { return std::polar(1.0, angle); }

void require_grid(std::size_t grid) {
  if (grid < kMinGrid) {
    std::ostringstream os;
    os << "theta grid must have at least " << kMinGrid << " points, got " << grid;
    throw Error(ErrorCode::InvalidInput, os.str());
  }
}

// Support function of W(m) in direction e^{i psi}.
double support(const ComplexMatrix& m, double psi) {
  return linalg::max_eigenvalue_unchecked(linalg::hermitian_part(unit(-psi) * m));
}

struct Scan {
  std::vector<double> support;
  std::vector<Complex> boundary;
};

Scan scan_support(const ComplexMatrix& m, std::size_t grid) {
  Scan s;
  s.support.resize(grid);
  s.boundary.resize(grid);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m.rows());
  for (std::size_t k = 0; k < grid; ++k) {
    const double psi = kTwoPi * static_cast<double>(k) / static_cast<double>(grid);
    solver.compute(linalg::hermitian_part(unit(-psi) * m));
    if (solver.info() != Eigen::Success) {
      throw Error(ErrorCode::NumericalFailure, "Hermitian eigensolver did not converge");
    }
    const Eigen::Index top = m.rows() - 1;
    s.support[k] = solver.eigenvalues()(top);
    const ComplexVector x = solver.eigenvectors().col(top);
    s.boundary[k] = x.dot(m * x);
  }
  return s;
}

// Maximizes a 2*pi-periodic objective: grid values are given, the best few
// cyclic local maxima are refined by golden section within one grid cell.
template <class F>
double refine_periodic_max(F&& f, const std::vector<double>& grid_values, double tol) {
  const std::size_t n = grid_values.size();
  const double h = kTwoPi / static_cast<double>(n);
  std::vector<std::size_t> peaks;
  for (std::size_t k = 0; k < n; ++k) {
    const double v = grid_values[k];
    if (v >= grid_values[(k + n - 1) % n] && v >= grid_values[(k + 1) % n]) peaks.push_back(k);
  }
  std::stable_sort(peaks.begin(), peaks.end(),
                   [&](std::size_t l, std::size_t r) { return grid_values[l] > grid_values[r]; });
  if (peaks.size() > kRefineCandidates) peaks.resize(kRefineCandidates);

  double best = *std::max_element(grid_values.begin(), grid_values.end());
  for (std::size_t k : peaks) {
    const double center = h * static_cast<double>(k);
    const auto m = opt::golden_section_maximize(f, center - h, center + h, tol);
    best = std::max(best, m.value);
  }
  return best;
}

RangeEstimate scan_matrix(const ComplexMatrix& m, const RangeOptions& opt) {
  require_grid(opt.theta_grid);
  RangeEstimate est;
  est.theta_grid = opt.theta_grid;
  if (m.size() == 0) {
    est.degenerate = true;
    return est;
  }

  Scan s = scan_support(m, opt.theta_grid);
  est.radius = refine_periodic_max([&](double psi) { return support(m, psi); }, s.support,
                                   opt.theta_tol);
  est.refined = true;

  const auto hull = geometry::convex_hull(s.boundary);
  est.crawford = std::min(geometry::distance_to_hull(Complex(0.0, 0.0), hull), est.radius);
  est.boundary = std::move(s.boundary);
  return est;
}

}  // namespace

RangeEstimate numerical_range(const SemiOperator& op, const RangeOptions& opt) {
  return scan_matrix(op.compact(), opt);
}

double a_numerical_radius(const SemiOperator& op, const RangeOptions& opt) {
  return numerical_range(op, opt).radius;
}

double a_crawford(const SemiOperator& op, const RangeOptions& opt) {
  return numerical_range(op, opt).crawford;
}

double classical_numerical_radius(const ComplexMatrix& m, const RangeOptions& opt) {
  linalg::require_finite(m);
  linalg::require_square(m);
  return scan_matrix(m, opt).radius;
}

double w_theta_identity_check(const SemiOperator& op, std::size_t grid) {
  require_grid(grid);
  auto objective = [&](double theta) {
    return a_operator_seminorm(re_a(scaled(op, unit(theta))));
  };
  std::vector<double> values(grid);
  for (std::size_t k = 0; k < grid; ++k) {
    values[k] = objective(kTwoPi * static_cast<double>(k) / static_cast<double>(grid));
  }
  const std::size_t k = static_cast<std::size_t>(
      std::max_element(values.begin(), values.end()) - values.begin());
  const double h = kTwoPi / static_cast<double>(grid);
  const double center = h * static_cast<double>(k);
  const auto refined = opt::golden_section_maximize(objective, center - h, center + h, 1e-10);
  return std::max(values[k], refined.value);
}

double sampled_radius(const SemiOperator& op, std::size_t samples, std::uint64_t seed) {
  const ComplexMatrix& r = op.compact();
  if (r.size() == 0) return 0.0;
  std::mt19937_64 rng(seed);
  auto gaussian = [&] {
    const double u1 = std::max(opt::uniform01(rng), 1e-300);
    const double u2 = opt::uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  };
  // in range(A) coordinates an A-unit vector is an ordinary unit vector
  ComplexVector y(r.rows());
  double best = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    for (Eigen::Index i = 0; i < y.size(); ++i) y(i) = Complex(gaussian(), gaussian());
    const double norm2 = y.squaredNorm();
    if (norm2 == 0.0) continue;
    best = std::max(best, std::abs(y.dot(r * y)) / norm2);
  }
  return best;
}

std::vector<Complex> general_eigenvalues(const ComplexMatrix& m) {
  linalg::require_finite(m);
  linalg::require_square(m);
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, true);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NumericalFailure, "unsymmetric eigensolver did not converge");
  }
  const double tol = 1e-8 * (1.0 + linalg::spectral_norm(m));
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const Complex lambda = solver.eigenvalues()(i);
    ComplexVector v = solver.eigenvectors().col(i);
    v.normalize();
    const double residual = (m * v - lambda * v).norm();
    if (!(residual <= tol)) {
      std::ostringstream os;
      os << "eigenpair residual " << residual << " exceeds " << tol;
      throw Error(ErrorCode::NumericalFailure, os.str());
    }
    out.push_back(lambda);
  }
  std::sort(out.begin(), out.end(), [](Complex l, Complex r) {
    return l.real() < r.real() || (l.real() == r.real() && l.imag() < r.imag());
  });
  return out;
}

InclusionReport spectral_inclusion_check(const SemiOperator& op, const RangeOptions& opt,
                                         bool allow_singular) {
  if (!op.context()->strictly_positive() && !allow_singular) {
    throw Error(ErrorCode::NotStrictlyPositive,
                "spectral inclusion needs A >= mI > 0, but A is singular");
  }
  const RangeEstimate est = numerical_range(op, opt);
  InclusionReport rep;
  rep.radius = est.radius;
  rep.eigenvalues = general_eigenvalues(op.t());
  rep.tolerance = 1e-6 * (1.0 + est.radius);
  const auto hull = geometry::convex_hull(est.boundary);
  for (const Complex& lambda : rep.eigenvalues) {
    rep.max_violation = std::max(rep.max_violation, geometry::distance_to_hull(lambda, hull));
  }
  rep.pass = rep.max_violation <= rep.tolerance;
  return rep;
}

}  // namespace semirad
