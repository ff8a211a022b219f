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

// Random instance generators and brute-force oracles shared by the tests.
// The oracles only evaluate quadratic forms; they never touch an
// eigensolver, so they stay independent of the theta scans they check.

#ifndef SEMIRAD_TESTS_SUPPORT_HPP
#define SEMIRAD_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "semirad/linalg.hpp"
#include "semirad/optimize.hpp"
#include "semirad/semihilbert.hpp"

namespace semirad::testing {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return lo + (hi - lo) * opt::uniform01(gen_);
  }

  // Box-Muller on our own uniforms keeps sequences identical across stdlibs.
  double normal() {
    const double u1 = std::max(uniform(), 1e-300);
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  Complex complex_normal() { return {normal(), normal()}; }

  std::size_t index(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(uniform() * static_cast<double>(hi - lo + 1)) % (hi - lo + 1);
  }

private:
  std::mt19937_64 gen_;
};

inline ComplexMatrix random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.complex_normal();
  return m;
}

inline ComplexMatrix random_matrix(Rng& rng, Eigen::Index n) { return random_matrix(rng, n, n); }

inline ComplexVector random_vector(Rng& rng, Eigen::Index n) {
  ComplexVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.complex_normal();
  return v;
}

inline ComplexMatrix random_hermitian(Rng& rng, Eigen::Index n) {
  const ComplexMatrix g = random_matrix(rng, n);
  return 0.5 * (g + g.adjoint());
}

/// G^* G / n + 0.1 I: strictly positive with a moderate condition number.
inline ComplexMatrix random_positive_definite(Rng& rng, Eigen::Index n) {
  const ComplexMatrix g = random_matrix(rng, n);
  ComplexMatrix a = g.adjoint() * g / static_cast<double>(n);
  a += 0.1 * ComplexMatrix::Identity(n, n);
  return 0.5 * (a + a.adjoint());
}

/// Rank-r PSD matrix G^* G with G of shape r x n.
inline ComplexMatrix random_psd_rank(Rng& rng, Eigen::Index n, Eigen::Index r) {
  const ComplexMatrix g = random_matrix(rng, r, n);
  const ComplexMatrix a = g.adjoint() * g;
  return 0.5 * (a + a.adjoint());
}

/// A random T with P T (I - P) = 0 for P the projection onto range(A),
/// which is exactly the range condition R(T^* A) in R(A).
inline ComplexMatrix random_member(Rng& rng, const PositiveOperator& ctx) {
  const auto n = static_cast<Eigen::Index>(ctx.dim());
  const ComplexMatrix x = random_matrix(rng, n);
  const ComplexMatrix& p = ctx.projection();
  return x - p * x * (ComplexMatrix::Identity(n, n) - p);
}

/// x - P x (I - P): the closest adjustment of x satisfying the range
/// condition R(T^* A) in R(A).
inline ComplexMatrix make_member(const PositiveOperator& ctx, const ComplexMatrix& x) {
  const auto n = static_cast<Eigen::Index>(ctx.dim());
  const ComplexMatrix& p = ctx.projection();
  return x - p * x * (ComplexMatrix::Identity(n, n) - p);
}

/// Random A-unitary for A > 0: A^{-1/2} Q A^{1/2} with Q unitary.
inline ComplexMatrix random_a_unitary(Rng& rng, const PositiveOperator& ctx) {
  const auto n = static_cast<Eigen::Index>(ctx.dim());
  Eigen::HouseholderQR<ComplexMatrix> qr(random_matrix(rng, n));
  const ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  return ctx.sqrt_pinv() * q * ctx.sqrt();
}

/// Supremum of a ratio of quadratic forms by sampling: uniform draws first,
/// then stochastic hill climbers that accept only improving perturbations.
/// score(x) returns {value, angle}; one climber starts from the best uniform
/// draw in each angular sector, so local maxima at different arguments of
/// <Tx, x>_A all get a climber. Every evaluated value is an honest sample of
/// the ratio, so the result never exceeds the true supremum beyond
/// rounding. samples counts every evaluation.
template <class Score>
double sampled_sup(Score&& score, Eigen::Index n, Rng& rng, std::size_t samples,
                   const ComplexMatrix* project = nullptr) {
  constexpr std::size_t kSectors = 16;
  constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
  auto draw = [&] {
    ComplexVector x = random_vector(rng, n);
    if (project) x = (*project) * x;
    return x;
  };
  const std::size_t uniform_draws = samples / 5;
  std::vector<std::pair<double, ComplexVector>> seeds(kSectors, {-1.0, ComplexVector()});
  for (std::size_t s = 0; s < uniform_draws; ++s) {
    ComplexVector x = draw();
    const auto [value, angle] = score(x);
    if (!std::isfinite(value)) continue;
    double frac = angle / kTwoPi;
    frac -= std::floor(frac);
    const std::size_t sector = std::min(kSectors - 1, static_cast<std::size_t>(frac * kSectors));
    if (value > seeds[sector].first) seeds[sector] = {value, std::move(x)};
  }
  std::erase_if(seeds, [](const auto& s) { return s.first < 0.0; });

  double best = 0.0;
  for (const auto& s : seeds) best = std::max(best, s.first);
  const std::size_t per_climber = (samples - uniform_draws) / std::max<std::size_t>(seeds.size(), 1);
  for (auto& [value, x] : seeds) {
    double sigma = 0.3;
    std::size_t stall = 0;
    for (std::size_t s = 0; s < per_climber; ++s) {
      ComplexVector y = x + sigma * x.norm() / std::sqrt(static_cast<double>(n)) * draw();
      if (project) y = (*project) * y;
      const double v = score(y).first;
      if (std::isfinite(v) && v > value) {
        value = v;
        x = y / y.norm();
        sigma = std::min(sigma * 1.5, 1.0);
        stall = 0;
      } else if (++stall >= 30) {
        sigma = std::max(sigma * 0.5, 1e-9);
        stall = 0;
      }
    }
    best = std::max(best, value);
  }
  return best;
}

/// sup |<Tx, x>_A| / <x, x>_A by sampling.
inline double sampled_numerical_radius(const ComplexMatrix& a, const ComplexMatrix& t, Rng& rng,
                                       std::size_t samples = 100000,
                                       const ComplexMatrix* project = nullptr) {
  const ComplexMatrix at = a * t;
  auto ratio = [&](const ComplexVector& x) {
    const double den = x.dot(a * x).real();
    const Complex q = x.dot(at * x) / den;
    return std::pair{std::abs(q), std::arg(q)};
  };
  return sampled_sup(ratio, t.rows(), rng, samples, project);
}

/// sup ||Tx||_A / ||x||_A by sampling.
inline double sampled_seminorm(const ComplexMatrix& a, const ComplexMatrix& t, Rng& rng,
                               std::size_t samples = 100000,
                               const ComplexMatrix* project = nullptr) {
  const ComplexMatrix tat = t.adjoint() * a * t;
  auto ratio = [&](const ComplexVector& x) {
    const double den = x.dot(a * x).real();
    return std::pair{std::sqrt(std::max(x.dot(tat * x).real(), 0.0) / den), 0.0};
  };
  return sampled_sup(ratio, t.rows(), rng, samples, project);
}

/// Distance from the origin to a compact convex set with support function h:
/// max(0, max_psi -h(psi)). Used to check hull-based Crawford numbers.
template <class Support>
double distance_from_support(Support&& h, std::size_t grid = 20000) {
  double best = 0.0;
  for (std::size_t k = 0; k < grid; ++k) {
    const double psi = 2.0 * 3.14159265358979323846 * static_cast<double>(k) / static_cast<double>(grid);
    best = std::max(best, -h(psi));
  }
  return best;
}

}  // namespace semirad::testing

#endif  // SEMIRAD_TESTS_SUPPORT_HPP
