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

#ifndef SEMIRAD_OPTIMIZE_HPP
#define SEMIRAD_OPTIMIZE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace semirad::opt {

struct Minimum1D {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section minimization of f on [lo, hi] until the bracket is
/// narrower than x_tol. Returns the best point evaluated, so the result is
/// never worse than f at either interior probe.
template <class F>
Minimum1D golden_section_minimize(F&& f, double lo, double hi, double x_tol,
                                  std::size_t max_iter = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  Minimum1D best = fc <= fd ? Minimum1D{c, fc} : Minimum1D{d, fd};
  for (std::size_t it = 0; it < max_iter && (b - a) > x_tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      if (fc < best.value) best = {c, fc};
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      if (fd < best.value) best = {d, fd};
    }
  }
  return best;
}

template <class F>
Minimum1D golden_section_maximize(F&& f, double lo, double hi, double x_tol,
                                  std::size_t max_iter = 200) {
  Minimum1D m = golden_section_minimize([&](double x) { return -f(x); }, lo, hi, x_tol, max_iter);
  m.value = -m.value;
  return m;
}

/// Deterministic uniform draw on [0, 1). std::uniform_real_distribution is
/// implementation-defined, so seeded runs would differ across stdlibs.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct NelderMeadOptions {
  std::size_t max_evaluations = 2000;
  double initial_step = 0.5;
  double f_tol = 1e-14;
  double x_tol = 1e-12;
};

struct MinimumND {
  std::vector<double> x;
  double value = 0.0;
  std::size_t evaluations = 0;
};

/// Nelder-Mead downhill simplex. When the simplex collapses before the
/// evaluation budget is spent it is rebuilt around the incumbent with the
/// initial step shrunk tenfold, which helps on kinked objectives such as
/// pointwise maxima.
template <class F>
MinimumND nelder_mead(F&& f, std::vector<double> x0, const NelderMeadOptions& opt = {}) {
  const std::size_t dim = x0.size();
  MinimumND best{x0, f(x0), 1};
  if (dim == 0) return best;

  constexpr double kReflect = 1.0;
  constexpr double kExpand = 2.0;
  constexpr double kContract = 0.5;
  constexpr double kShrink = 0.5;

  double step = opt.initial_step;
  std::vector<std::vector<double>> simplex(dim + 1);
  std::vector<double> values(dim + 1);
  std::vector<std::size_t> order(dim + 1);

  auto eval = [&](const std::vector<double>& x) {
    const double v = f(x);
    ++best.evaluations;
    if (v < best.value) {
      best.value = v;
      best.x = x;
    }
    return v;
  };

  while (best.evaluations < opt.max_evaluations && step > opt.x_tol) {
    simplex[0] = best.x;
    values[0] = best.value;
    for (std::size_t i = 0; i < dim; ++i) {
      simplex[i + 1] = best.x;
      simplex[i + 1][i] += step;
      values[i + 1] = eval(simplex[i + 1]);
    }

    while (best.evaluations < opt.max_evaluations) {
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t l, std::size_t r) { return values[l] < values[r]; });
      const std::size_t lo = order.front();
      const std::size_t hi = order.back();
      const std::size_t second = order[dim - 1];

      double size = 0.0;
      for (std::size_t i = 0; i <= dim; ++i) {
        for (std::size_t k = 0; k < dim; ++k) {
          size = std::max(size, std::abs(simplex[i][k] - simplex[lo][k]));
        }
      }
      const double spread = values[hi] - values[lo];
      if (size < opt.x_tol || spread <= opt.f_tol * (1.0 + std::abs(values[lo]))) break;

      std::vector<double> centroid(dim, 0.0);
      for (std::size_t i = 0; i <= dim; ++i) {
        if (i == hi) continue;
        for (std::size_t k = 0; k < dim; ++k) centroid[k] += simplex[i][k];
      }
      for (double& c : centroid) c /= static_cast<double>(dim);

      auto along = [&](double coef) {
        std::vector<double> x(dim);
        for (std::size_t k = 0; k < dim; ++k) {
          x[k] = centroid[k] + coef * (simplex[hi][k] - centroid[k]);
        }
        return x;
      };

      std::vector<double> xr = along(-kReflect);
      const double fr = eval(xr);
      if (fr < values[lo]) {
        std::vector<double> xe = along(-kReflect * kExpand);
        const double fe = eval(xe);
        if (fe < fr) {
          simplex[hi] = std::move(xe);
          values[hi] = fe;
        } else {
          simplex[hi] = std::move(xr);
          values[hi] = fr;
        }
      } else if (fr < values[second]) {
        simplex[hi] = std::move(xr);
        values[hi] = fr;
      } else {
        const bool outside = fr < values[hi];
        std::vector<double> xc = along(outside ? -kContract : kContract);
        const double fc = eval(xc);
        if (fc < (outside ? fr : values[hi])) {
          simplex[hi] = std::move(xc);
          values[hi] = fc;
        } else {
          for (std::size_t i = 0; i <= dim; ++i) {
            if (i == lo) continue;
            for (std::size_t k = 0; k < dim; ++k) {
              simplex[i][k] = simplex[lo][k] + kShrink * (simplex[i][k] - simplex[lo][k]);
            }
            values[i] = eval(simplex[i]);
          }
        }
      }
    }
    step *= 0.1;
  }
  return best;
}

}  // namespace semirad::opt

#endif  // SEMIRAD_OPTIMIZE_HPP
