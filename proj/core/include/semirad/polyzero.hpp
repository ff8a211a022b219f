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

#ifndef SEMIRAD_POLYZERO_HPP
#define SEMIRAD_POLYZERO_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "semirad/linalg.hpp"

namespace semirad {

// Monic polynomial z^n + a_{n-1} z^{n-1} + ... + a_0.
class PolynomialSpec {
public:
  /// coeffs = (a_0, ..., a_{n-1}); the leading coefficient is 1.
  static PolynomialSpec monic(std::vector<Complex> coeffs);
  /// coeffs = (c_0, ..., c_{n-1}) of leading * z^n + sum c_j z^j; divided
  /// through by the leading coefficient.
  static PolynomialSpec normalized(std::vector<Complex> coeffs, Complex leading);

  std::size_t degree() const noexcept { return coeffs_.size(); }
  /// a_0 ... a_{n-1} after normalization.
  const std::vector<Complex>& coefficients() const noexcept { return coeffs_; }
  /// a_j
  Complex coeff(std::size_t j) const { return coeffs_.at(j); }
  /// Leading coefficient of the input before normalization.
  Complex leading() const noexcept { return leading_; }

private:
  PolynomialSpec(std::vector<Complex> coeffs, Complex leading);
  std::vector<Complex> coeffs_;
  Complex leading_{1.0, 0.0};
};

// Strictly positive weights d_1..d_n.
class WeightVector {
public:
  /// Throws NonPositiveWeight on an entry that is not finite and > 0.
  explicit WeightVector(std::vector<double> d);
  static WeightVector ones(std::size_t n);

  std::size_t size() const noexcept { return d_.size(); }
  const std::vector<double>& values() const noexcept { return d_; }
  double operator[](std::size_t i) const { return d_[i]; }

private:
  std::vector<double> d_;
};

/// Frobenius companion matrix: first row (-a_{n-1}, ..., -a_0), ones on the
/// subdiagonal.
ComplexMatrix companion(const PolynomialSpec& p);

/// 1 + max |a_i|
double bound_cauchy(const PolynomialSpec& p);
/// sqrt(1 + sum |a_i|^2)
double bound_carmichael_mason(const PolynomialSpec& p);
/// ((sum |a_j|^2)^{1/2} + |a_{n-1}|) / 2 + cos(pi / (n + 1))
double bound_fujii_kubo(const PolynomialSpec& p);

/// Row estimates alpha_1..alpha_n of the diagonally weighted numerical
/// radius of the companion matrix. Each is homogeneous of degree 0 in d.
std::vector<double> alphas(const PolynomialSpec& p, const WeightVector& d);

/// max_k alpha_k(d); bounds w_A(C(p)) for A = diag(d) and so every zero.
double bound_prk(const PolynomialSpec& p, const WeightVector& d);

inline constexpr std::size_t kDefaultRestarts = 8;
inline constexpr std::size_t kDefaultIterations = 2000;

struct WeightOptimum {
  WeightVector d_star = WeightVector::ones(1);
  double value = 0.0;
  std::size_t evaluations = 0;
};

/// Minimizes max_k alpha_k(d) over d > 0 in log coordinates with d_1 = 1.
/// The first run starts from all ones, the remaining restarts from seeded
/// random points; each run gets an evaluation budget of iters.
WeightOptimum optimize_weights(const PolynomialSpec& p, std::size_t restarts = kDefaultRestarts,
                               std::size_t iters = kDefaultIterations, std::uint64_t seed = 0);

/// Zeros of p as eigenvalues of the companion matrix.
std::vector<Complex> polynomial_zeros(const PolynomialSpec& p);

struct ZeroOptions {
  std::size_t restarts = kDefaultRestarts;
  std::size_t iters = kDefaultIterations;
  std::uint64_t seed = 0;
  /// Weights supplied by the caller; reported alongside the optimized ones.
  std::optional<WeightVector> user_weights;
};

struct ZeroBoundReport {
  double r_c = 0.0;
  double r_cm = 0.0;
  double r_fk = 0.0;
  /// max(alphas) at d_star
  double r_prk = 0.0;
  WeightVector d_star = WeightVector::ones(1);
  std::vector<double> alphas;
  std::optional<double> r_prk_user;
  std::vector<double> root_moduli;
  double max_root_modulus = 0.0;
  /// Leading coefficient the input was divided by.
  Complex leading{1.0, 0.0};
};

ZeroBoundReport zero_bound_report(const PolynomialSpec& p, const ZeroOptions& opt = {});

}  // namespace semirad

#endif  // SEMIRAD_POLYZERO_HPP
