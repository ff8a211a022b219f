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

#ifndef SEMIRAD_BOUNDS_HPP
#define SEMIRAD_BOUNDS_HPP

#include <cstddef>

#include "semirad/arange.hpp"
#include "semirad/semihilbert.hpp"

namespace semirad {

inline constexpr std::size_t kDefaultPhiGrid = 64;
inline constexpr std::size_t kDefaultTGrid = 64;

struct BoundOptions {
  RangeOptions range;
  std::size_t phi_grid = kDefaultPhiGrid;
  std::size_t t_grid = kDefaultTGrid;
  /// Final bracket width of the phi and t golden-section searches.
  double search_tol = 1e-10;
};

// Lower and upper estimates of w_A(T) together with the reference value.
struct BoundReport {
  double w_exact = 0.0;
  double lower_21 = 0.0;
  double lower_22 = 0.0;
  double upper_hphi = 0.0;
  double phi_star = 0.0;
  /// ||T||_A / 2
  double sandwich_lower = 0.0;
  /// ||T||_A
  double sandwich_upper = 0.0;
  double re_norm = 0.0;
  double im_norm = 0.0;
  std::size_t theta_grid = 0;
  std::size_t phi_grid = 0;

  /// max(lower bounds) - slack <= w_exact <= min(upper bounds) + slack
  bool brackets(double slack = 1e-6) const noexcept;
};

/// sqrt(||Re_A T||_A^2 + m_A(Im_A T)^2)
double lower_bound_21(const SemiOperator& op, const RangeOptions& opt = {});
/// sqrt(||Im_A T||_A^2 + m_A(Re_A T)^2)
double lower_bound_22(const SemiOperator& op, const RangeOptions& opt = {});

struct PhiBound {
  double value = 0.0;
  double phi_star = 0.0;
};

/// f(phi) = ||H_phi||_A^2 + ||H_{phi + pi/2}||_A^2 with H_phi = Re_A(e^{i phi} T).
double hphi_objective(const SemiOperator& op, double phi);

/// sqrt(min f) over phi in [0, pi/2) (f has period pi/2): grid scan plus
/// golden-section refinement.
PhiBound upper_bound_hphi(const SemiOperator& op, std::size_t phi_grid = kDefaultPhiGrid,
                          double tol = 1e-10);

BoundReport bound_report(const SemiOperator& op, const BoundOptions& opt = {});

// ---------------------------------------------------------------------------
// 2x2 operator matrices over B = diag(A, A)

/// The four blocks of T = [[T11, T12], [T21, T22]], all over the same A.
class BlockOperator {
public:
  /// Throws ContextMismatch unless the four blocks share one context.
  BlockOperator(SemiOperator t11, SemiOperator t12, SemiOperator t21, SemiOperator t22);

  const SemiOperator& t11() const noexcept { return t11_; }
  const SemiOperator& t12() const noexcept { return t12_; }
  const SemiOperator& t21() const noexcept { return t21_; }
  const SemiOperator& t22() const noexcept { return t22_; }
  const Context& context() const noexcept { return t11_.context(); }

private:
  SemiOperator t11_, t12_, t21_, t22_;
};

/// diag(A, A)
Context block_context(const Context& ctx);

/// The assembled 2n x 2n operator over block_context(context()).
SemiOperator assemble(const BlockOperator& blocks);
SemiOperator assemble(const BlockOperator& blocks, const Context& block_ctx);

/// Scalars the block bounds are built from.
struct BlockIngredients {
  double w11 = 0.0;
  double w22 = 0.0;
  double n12 = 0.0;
  double n21 = 0.0;
};

BlockIngredients block_ingredients(const BlockOperator& blocks, const RangeOptions& opt = {});

double lemma24_closed_form(double w11, double n12);
double th25_closed_form(const BlockIngredients& in);
double th27_closed_form(const BlockIngredients& in, double t);
double th28_closed_form(const BlockIngredients& in, double t);

/// Upper bound for w_B([[T11, T12], [O, O]]).
double block_bound_lemma24(const SemiOperator& t11, const SemiOperator& t12,
                           const RangeOptions& opt = {});
double block_bound_th25(const BlockOperator& blocks, const RangeOptions& opt = {});
/// t must lie in [0, 1] (TOutOfRange otherwise).
double block_bound_th27(const BlockOperator& blocks, double t, const RangeOptions& opt = {});
double block_bound_th28(const BlockOperator& blocks, double t, const RangeOptions& opt = {});

enum class BlockTheorem { Th27, Th28 };

struct TOptimum {
  double t_star = 0.0;
  double value = 0.0;
};

/// Minimizes the chosen bound over t in [0, 1]. The objective is convex in
/// t; a grid scan seeds a golden-section search and the endpoints and
/// midpoint are always compared.
TOptimum optimize_t(BlockTheorem which, const BlockIngredients& in,
                    std::size_t grid = kDefaultTGrid, double tol = 1e-10);
TOptimum optimize_t(BlockTheorem which, const BlockOperator& blocks,
                    const BoundOptions& opt = {});

struct MatrixBoundReport {
  double w_b_exact = 0.0;
  /// Bound for the [[T11, T12], [O, O]] part alone.
  double lemma24 = 0.0;
  /// w_B of [[T11, T12], [O, O]], the quantity lemma24 bounds.
  double w_b_top_row = 0.0;
  double th25 = 0.0;
  double th27 = 0.0;
  double th28 = 0.0;
  double t_star_27 = 0.0;
  double t_star_28 = 0.0;
  BlockIngredients ingredients;

  /// Every bound dominates the exact value it targets, within slack.
  bool consistent(double slack = 1e-6) const noexcept;
};

MatrixBoundReport matrix_bound_report(const BlockOperator& blocks, const BoundOptions& opt = {});

}  // namespace semirad

#endif  // SEMIRAD_BOUNDS_HPP
