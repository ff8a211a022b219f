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

#include "semirad/polyzero.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "semirad/arange.hpp"
#include "semirad/optimize.hpp"

namespace semirad {

namespace {

constexpr double kLogWeightLimit = 50.0;
constexpr double kRestartSpread = 3.0;

void require_coefficients(const std::vector<Complex>& coeffs) {
  if (coeffs.empty()) {
    throw Error(ErrorCode::DegreeZero, "polynomial must have degree at least 1");
  }
  for (const Complex& c : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error(ErrorCode::NonFinite, "polynomial coefficient is NaN or infinite");
    }
  }
}

WeightVector weights_from_log(const std::vector<double>& u) {
  std::vector<double> d(u.size() + 1, 1.0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    d[i + 1] = std::exp(std::clamp(u[i], -kLogWeightLimit, kLogWeightLimit));
  }
  return WeightVector(std::move(d));
}

}  // namespace

PolynomialSpec::PolynomialSpec(std::vector<Complex> coeffs, Complex leading)
    : coeffs_(std::move(coeffs)), leading_(leading) {}

PolynomialSpec PolynomialSpec::monic(std::vector<Complex> coeffs) {
  require_coefficients(coeffs);
  return PolynomialSpec(std::move(coeffs), Complex(1.0, 0.0));
}

PolynomialSpec PolynomialSpec::normalized(std::vector<Complex> coeffs, Complex leading) {
  require_coefficients(coeffs);
  if (leading == Complex(0.0, 0.0) || !std::isfinite(std::abs(leading))) {
    throw Error(ErrorCode::InvalidInput, "leading coefficient must be finite and nonzero");
  }
  for (Complex& c : coeffs) c /= leading;
  require_coefficients(coeffs);
  return PolynomialSpec(std::move(coeffs), leading);
}

WeightVector::WeightVector(std::vector<double> d) : d_(std::move(d)) {
  if (d_.empty()) {
    throw Error(ErrorCode::WeightDimensionMismatch, "weight vector is empty");
  }
  for (double v : d_) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      std::ostringstream os;
      os << "weight " << v << " is not strictly positive";
      throw Error(ErrorCode::NonPositiveWeight, os.str());
    }
  }
}

WeightVector WeightVector::ones(std::size_t n) { return WeightVector(std::vector<double>(n, 1.0)); }

ComplexMatrix companion(const PolynomialSpec& p) {
  const auto n = static_cast<Eigen::Index>(p.degree());
  if (n == 0) throw Error(ErrorCode::DegreeZero, "polynomial must have degree at least 1");
  ComplexMatrix c = ComplexMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    c(0, j) = -p.coeff(static_cast<std::size_t>(n - 1 - j));
  }
  for (Eigen::Index i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  return c;
}

double bound_cauchy(const PolynomialSpec& p) {
  double m = 0.0;
  for (const Complex& a : p.coefficients()) m = std::max(m, std::abs(a));
  return 1.0 + m;
}

double bound_carmichael_mason(const PolynomialSpec& p) {
  double s = 1.0;
  for (const Complex& a : p.coefficients()) s += std::norm(a);
  return std::sqrt(s);
}

double bound_fujii_kubo(const PolynomialSpec& p) {
  double s = 0.0;
  for (const Complex& a : p.coefficients()) s += std::norm(a);
  const std::size_t n = p.degree();
  return 0.5 * (std::sqrt(s) + std::abs(p.coeff(n - 1))) +
         std::cos(std::numbers::pi / static_cast<double>(n + 1));
}

std::vector<double> alphas(const PolynomialSpec& p, const WeightVector& d) {
  const std::size_t n = p.degree();
  if (d.size() != n) {
    std::ostringstream os;
    os << "expected " << n << " weights, got " << d.size();
    throw Error(ErrorCode::WeightDimensionMismatch, os.str());
  }
  // |a_{n-k}| for k = 1..n
  auto mod = [&](std::size_t k) { return std::abs(p.coeff(n - k)); };
  double total = 0.0;
  for (const Complex& a : p.coefficients()) total += std::abs(a);

  std::vector<double> out(n);
  if (n == 1) {
    // no coupling terms: the first-row estimate alone, equal to |a_0|
    out[0] = 0.5 * (mod(1) + total);
    return out;
  }
  const double d1 = d[0];
  out[0] = (0.5 * d1 * (mod(1) + total) + 0.5 * d[1]) / d1;
  for (std::size_t k = 2; k < n; ++k) {
    const double dk = d[k - 1];
    out[k - 1] = (0.5 * d1 * mod(k) + 0.5 * dk + 0.5 * d[k]) / dk;
  }
  out[n - 1] = (0.5 * d1 * mod(n) + 0.5 * d[n - 1]) / d[n - 1];
  return out;
}

double bound_prk(const PolynomialSpec& p, const WeightVector& d) {
  const auto a = alphas(p, d);
  return *std::max_element(a.begin(), a.end());
}

WeightOptimum optimize_weights(const PolynomialSpec& p, std::size_t restarts, std::size_t iters,
                               std::uint64_t seed) {
  const std::size_t n = p.degree();
  if (n == 0) throw Error(ErrorCode::DegreeZero, "polynomial must have degree at least 1");

  WeightOptimum best{WeightVector::ones(n), bound_prk(p, WeightVector::ones(n)), 1};
  if (n == 1) return best;

  auto objective = [&](const std::vector<double>& u) { return bound_prk(p, weights_from_log(u)); };
  opt::NelderMeadOptions nm;
  nm.max_evaluations = std::max<std::size_t>(iters, 1);

  const std::size_t runs = std::max<std::size_t>(restarts, 1);
  for (std::size_t r = 0; r < runs; ++r) {
    std::vector<double> u0(n - 1, 0.0);
    if (r > 0) {
      std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (r + 1)));
      for (double& u : u0) u = kRestartSpread * (2.0 * opt::uniform01(rng) - 1.0);
    }
    const auto m = opt::nelder_mead(objective, std::move(u0), nm);
    best.evaluations += m.evaluations;
    if (m.value < best.value) {
      best.value = m.value;
      best.d_star = weights_from_log(m.x);
    }
  }
  return best;
}

std::vector<Complex> polynomial_zeros(const PolynomialSpec& p) {
  return general_eigenvalues(companion(p));
}

ZeroBoundReport zero_bound_report(const PolynomialSpec& p, const ZeroOptions& opt) {
  ZeroBoundReport rep;
  rep.leading = p.leading();
  rep.r_c = bound_cauchy(p);
  rep.r_cm = bound_carmichael_mason(p);
  rep.r_fk = bound_fujii_kubo(p);

  WeightOptimum best = optimize_weights(p, opt.restarts, opt.iters, opt.seed);
  if (opt.user_weights) {
    const double user = bound_prk(p, *opt.user_weights);
    rep.r_prk_user = user;
    if (user < best.value) {
      best.value = user;
      best.d_star = *opt.user_weights;
    }
  }
  rep.d_star = best.d_star;
  rep.alphas = alphas(p, rep.d_star);
  rep.r_prk = *std::max_element(rep.alphas.begin(), rep.alphas.end());

  for (const Complex& z : polynomial_zeros(p)) rep.root_moduli.push_back(std::abs(z));
  std::sort(rep.root_moduli.begin(), rep.root_moduli.end());
  rep.max_root_modulus = rep.root_moduli.back();
  return rep;
}

}  // namespace semirad
