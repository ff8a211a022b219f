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

#include "semirad/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "semirad/optimize.hpp"

namespace semirad {

namespace {

constexpr double kQuarterTurn = 0.5 * std::numbers::pi;

double hermitian_norm(const ComplexMatrix& h) {
  if (h.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NumericalFailure, "Hermitian eigensolver did not converge");
  }
  const auto& ev = solver.eigenvalues();
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

void require_unit_interval(double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    std::ostringstream os;
    os << "parameter t = " << t << " must lie in [0, 1]";
    throw Error(ErrorCode::TOutOfRange, os.str());
  }
}

SemiOperator zero_like(const SemiOperator& op) {
  const auto n = static_cast<Eigen::Index>(op.dim());
  return trusted_operator(op.context(), ComplexMatrix::Zero(n, n));
}

}  // namespace

bool BoundReport::brackets(double slack) const noexcept {
  const double lo = std::max({lower_21, lower_22, sandwich_lower});
  const double hi = std::min(upper_hphi, sandwich_upper);
  return lo - slack <= w_exact && w_exact <= hi + slack;
}

double lower_bound_21(const SemiOperator& op, const RangeOptions& opt) {
  const double re = a_operator_seminorm(re_a(op));
  const double m = a_crawford(im_a(op), opt);
  return std::sqrt(re * re + m * m);
}

double lower_bound_22(const SemiOperator& op, const RangeOptions& opt) {
  const double im = a_operator_seminorm(im_a(op));
  const double m = a_crawford(re_a(op), opt);
  return std::sqrt(im * im + m * m);
}

double hphi_objective(const SemiOperator& op, double phi) {
  // the compact reduced matrix of Re_A(e^{i phi} T) is the Hermitian part of
  // e^{i phi} times the compact reduced matrix of T
  const ComplexMatrix& r = op.compact();
  const double a = hermitian_norm(linalg::hermitian_part(std::polar(1.0, phi) * r));
  const double b = hermitian_norm(linalg::hermitian_part(std::polar(1.0, phi + kQuarterTurn) * r));
  return a * a + b * b;
}

PhiBound upper_bound_hphi(const SemiOperator& op, std::size_t phi_grid, double tol) {
  if (phi_grid < 8) {
    throw Error(ErrorCode::InvalidInput, "phi grid must have at least 8 points");
  }
  const double h = kQuarterTurn / static_cast<double>(phi_grid);
  std::size_t best_k = 0;
  double best = hphi_objective(op, 0.0);
  for (std::size_t k = 1; k < phi_grid; ++k) {
    const double v = hphi_objective(op, h * static_cast<double>(k));
    if (v < best) {
      best = v;
      best_k = k;
    }
  }
  const double center = h * static_cast<double>(best_k);
  const auto m = opt::golden_section_minimize([&](double phi) { return hphi_objective(op, phi); },
                                              center - h, center + h, tol);
  PhiBound out{std::sqrt(best), center};
  if (m.value < best) {
    out.value = std::sqrt(std::max(m.value, 0.0));
    out.phi_star = std::fmod(m.x + kQuarterTurn, kQuarterTurn);
  }
  return out;
}

BoundReport bound_report(const SemiOperator& op, const BoundOptions& opt) {
  BoundReport rep;
  rep.theta_grid = opt.range.theta_grid;
  rep.phi_grid = opt.phi_grid;
  rep.w_exact = a_numerical_radius(op, opt.range);
  rep.lower_21 = lower_bound_21(op, opt.range);
  rep.lower_22 = lower_bound_22(op, opt.range);
  const PhiBound hphi = upper_bound_hphi(op, opt.phi_grid, opt.search_tol);
  rep.upper_hphi = hphi.value;
  rep.phi_star = hphi.phi_star;
  rep.sandwich_upper = a_operator_seminorm(op);
  rep.sandwich_lower = 0.5 * rep.sandwich_upper;
  rep.re_norm = a_operator_seminorm(re_a(op));
  rep.im_norm = a_operator_seminorm(im_a(op));
  return rep;
}

BlockOperator::BlockOperator(SemiOperator t11, SemiOperator t12, SemiOperator t21,
                             SemiOperator t22)
    : t11_(std::move(t11)), t12_(std::move(t12)), t21_(std::move(t21)), t22_(std::move(t22)) {
  const Context& ctx = t11_.context();
  if (!same_context(ctx, t12_.context()) || !same_context(ctx, t21_.context()) ||
      !same_context(ctx, t22_.context())) {
    throw Error(ErrorCode::ContextMismatch, "block operators must share the same context A");
  }
}

Context block_context(const Context& ctx) {
  const auto n = static_cast<Eigen::Index>(ctx->dim());
  ComplexMatrix b = ComplexMatrix::Zero(2 * n, 2 * n);
  b.topLeftCorner(n, n) = ctx->a();
  b.bottomRightCorner(n, n) = ctx->a();
  return make_context(b, ctx->tolerances());
}

SemiOperator assemble(const BlockOperator& blocks, const Context& block_ctx) {
  const auto n = static_cast<Eigen::Index>(blocks.t11().dim());
  ComplexMatrix t(2 * n, 2 * n);
  t << blocks.t11().t(), blocks.t12().t(), blocks.t21().t(), blocks.t22().t();
  return make_operator(block_ctx, t);
}

SemiOperator assemble(const BlockOperator& blocks) {
  return assemble(blocks, block_context(blocks.context()));
}

BlockIngredients block_ingredients(const BlockOperator& blocks, const RangeOptions& opt) {
  return {a_numerical_radius(blocks.t11(), opt), a_numerical_radius(blocks.t22(), opt),
          a_operator_seminorm(blocks.t12()), a_operator_seminorm(blocks.t21())};
}

double lemma24_closed_form(double w11, double n12) {
  return 0.5 * (w11 + std::hypot(w11, n12));
}

double th25_closed_form(const BlockIngredients& in) {
  return 0.5 * (in.w11 + in.w22 + std::hypot(in.w11, in.n12) + std::hypot(in.w22, in.n21));
}

double th27_closed_form(const BlockIngredients& in, double t) {
  require_unit_interval(t);
  return 0.5 * in.w11 + in.w22 + 0.5 * std::hypot(t * in.w11, in.n12) +
         0.5 * std::hypot((1.0 - t) * in.w11, in.n21);
}

double th28_closed_form(const BlockIngredients& in, double t) {
  require_unit_interval(t);
  return 0.5 * in.w22 + in.w11 + 0.5 * std::hypot(t * in.w22, in.n21) +
         0.5 * std::hypot((1.0 - t) * in.w22, in.n12);
}

double block_bound_lemma24(const SemiOperator& t11, const SemiOperator& t12,
                           const RangeOptions& opt) {
  if (!same_context(t11.context(), t12.context())) {
    throw Error(ErrorCode::ContextMismatch, "block operators must share the same context A");
  }
  return lemma24_closed_form(a_numerical_radius(t11, opt), a_operator_seminorm(t12));
}

double block_bound_th25(const BlockOperator& blocks, const RangeOptions& opt) {
  return th25_closed_form(block_ingredients(blocks, opt));
}

double block_bound_th27(const BlockOperator& blocks, double t, const RangeOptions& opt) {
  require_unit_interval(t);
  return th27_closed_form(block_ingredients(blocks, opt), t);
}

double block_bound_th28(const BlockOperator& blocks, double t, const RangeOptions& opt) {
  require_unit_interval(t);
  return th28_closed_form(block_ingredients(blocks, opt), t);
}

TOptimum optimize_t(BlockTheorem which, const BlockIngredients& in, std::size_t grid,
                    double tol) {
  auto f = [&](double t) {
    t = std::clamp(t, 0.0, 1.0);
    return which == BlockTheorem::Th27 ? th27_closed_form(in, t) : th28_closed_form(in, t);
  };
  const std::size_t cells = std::max<std::size_t>(grid, 2);
  TOptimum best{0.0, f(0.0)};
  for (std::size_t k = 1; k <= cells; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(cells);
    const double v = f(t);
    if (v < best.value) best = {t, v};
  }
  const double h = 1.0 / static_cast<double>(cells);
  const auto m = opt::golden_section_minimize(f, std::max(best.t_star - h, 0.0),
                                              std::min(best.t_star + h, 1.0), tol);
  if (m.value < best.value) best = {std::clamp(m.x, 0.0, 1.0), m.value};
  if (const double mid = f(0.5); mid < best.value) best = {0.5, mid};
  return best;
}

TOptimum optimize_t(BlockTheorem which, const BlockOperator& blocks, const BoundOptions& opt) {
  return optimize_t(which, block_ingredients(blocks, opt.range), opt.t_grid, opt.search_tol);
}

bool MatrixBoundReport::consistent(double slack) const noexcept {
  return w_b_top_row <= lemma24 + slack && w_b_exact <= th25 + slack &&
         w_b_exact <= th27 + slack && w_b_exact <= th28 + slack;
}

MatrixBoundReport matrix_bound_report(const BlockOperator& blocks, const BoundOptions& opt) {
  MatrixBoundReport rep;
  const Context bctx = block_context(blocks.context());
  rep.w_b_exact = a_numerical_radius(assemble(blocks, bctx), opt.range);

  const BlockOperator top_row(blocks.t11(), blocks.t12(), zero_like(blocks.t11()),
                              zero_like(blocks.t11()));
  rep.w_b_top_row = a_numerical_radius(assemble(top_row, bctx), opt.range);

  rep.ingredients = block_ingredients(blocks, opt.range);
  rep.lemma24 = lemma24_closed_form(rep.ingredients.w11, rep.ingredients.n12);
  rep.th25 = th25_closed_form(rep.ingredients);
  const TOptimum o27 = optimize_t(BlockTheorem::Th27, rep.ingredients, opt.t_grid, opt.search_tol);
  const TOptimum o28 = optimize_t(BlockTheorem::Th28, rep.ingredients, opt.t_grid, opt.search_tol);
  rep.th27 = o27.value;
  rep.t_star_27 = o27.t_star;
  rep.th28 = o28.value;
  rep.t_star_28 = o28.t_star;
  return rep;
}

}  // namespace semirad
