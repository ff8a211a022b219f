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

#include <cmath>

#include "doctest.h"
#include "semirad/bounds.hpp"
#include "support.hpp"

using namespace semirad;
using semirad::testing::Rng;

namespace {

ComplexMatrix diag(std::initializer_list<Complex> entries) {
  ComplexVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (Complex c : entries) v(i++) = c;
  return v.asDiagonal();
}

ComplexMatrix scalar_identity(Eigen::Index n, Complex c) { return c * ComplexMatrix::Identity(n, n); }

BlockOperator blocks_of(const Context& ctx, const ComplexMatrix& t11, const ComplexMatrix& t12,
                        const ComplexMatrix& t21, const ComplexMatrix& t22) {
  return BlockOperator(make_operator(ctx, t11), make_operator(ctx, t12), make_operator(ctx, t21),
                       make_operator(ctx, t22));
}

}  // namespace

TEST_CASE("lower bounds on the diagonal example") {
  const SemiOperator op = make_operator(identity_context(2), diag({Complex(1, 1), Complex(2, 1)}));
  CHECK(std::abs(lower_bound_21(op) - std::sqrt(5.0)) <= 1e-8);
  CHECK(std::abs(lower_bound_22(op) - std::sqrt(2.0)) <= 1e-8);
  CHECK(std::abs(a_operator_seminorm(re_a(op)) - 2.0) <= 1e-12);
  CHECK(std::abs(a_operator_seminorm(im_a(op)) - 1.0) <= 1e-12);
}

TEST_CASE("lower bounds collapse on Hermitian and skew-Hermitian input") {
  Rng rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix h = semirad::testing::random_hermitian(rng, 4);
    const double norm = linalg::spectral_norm(h);
    CHECK(std::abs(lower_bound_21(make_operator(identity_context(4), h)) - norm) <= 1e-9);
    CHECK(std::abs(lower_bound_22(make_operator(identity_context(4), Complex(0, 1) * h)) - norm) <= 1e-9);
  }
}

TEST_CASE("H_phi upper bound") {
  const SemiOperator d = make_operator(identity_context(2), diag({Complex(1, 1), Complex(2, 1)}));
  CHECK(std::abs(hphi_objective(d, 0.0) - 5.0) <= 1e-12);
  const PhiBound b = upper_bound_hphi(d);
  CHECK(b.value <= std::sqrt(5.0) + 1e-12);
  CHECK(b.value >= a_numerical_radius(d) - 1e-6);
  CHECK(b.phi_star >= 0.0);
  CHECK(b.phi_star < 3.14159265358979323846 / 2);

  Rng rng(42);
  const ComplexMatrix h = semirad::testing::random_hermitian(rng, 3);
  const SemiOperator herm = make_operator(identity_context(3), h);
  const double norm = linalg::spectral_norm(h);
  CHECK(std::abs(hphi_objective(herm, 0.0) - norm * norm) <= 1e-9);
  CHECK(std::abs(upper_bound_hphi(herm).value - norm) <= 1e-9);
}

TEST_CASE("H_phi objective has period pi/2") {
  Rng rng(43);
  const Context ctx = make_context(semirad::testing::random_positive_definite(rng, 4));
  const SemiOperator op = make_operator(ctx, semirad::testing::random_matrix(rng, 4));
  for (double phi : {0.0, 0.3, 1.1, 2.0}) {
    const double f = hphi_objective(op, phi);
    CHECK(std::abs(hphi_objective(op, phi + 3.14159265358979323846 / 2) - f) <= 1e-10 * (1 + f));
  }
  // the A-seminorm route through re_a agrees with the compact shortcut
  const double phi = 0.7;
  const double a = a_operator_seminorm(re_a(scaled(op, std::polar(1.0, phi))));
  const double b = a_operator_seminorm(re_a(scaled(op, std::polar(1.0, phi + 3.14159265358979323846 / 2))));
  CHECK(std::abs(hphi_objective(op, phi) - (a * a + b * b)) <= 1e-9 * (1 + a * a + b * b));
}

TEST_CASE("bound report brackets w_A on random instances") {
  Rng rng(44);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<Eigen::Index>(rng.index(2, 6));
    const Context ctx = make_context(trial % 4 == 0 ? semirad::testing::random_psd_rank(rng, n, n - 1)
                                                    : semirad::testing::random_positive_definite(rng, n));
    const SemiOperator op = make_operator(ctx, semirad::testing::random_member(rng, *ctx));
    const BoundReport rep = bound_report(op);
    CHECK(rep.brackets());
    CHECK(rep.lower_21 <= rep.w_exact + 1e-6);
    CHECK(rep.lower_22 <= rep.w_exact + 1e-6);
    CHECK(rep.upper_hphi >= rep.w_exact - 1e-6);
    CHECK(rep.lower_21 >= rep.re_norm - 1e-8);
    CHECK(rep.lower_22 >= rep.im_norm - 1e-8);
    // the remark's phi = 0 value can only be worse than the optimum
    CHECK(rep.upper_hphi <= std::hypot(rep.re_norm, rep.im_norm) + 1e-12);
  }
}

TEST_CASE("block context and assembly") {
  Rng rng(45);
  const Context ctx = make_context(semirad::testing::random_positive_definite(rng, 3));
  const Context b = block_context(ctx);
  CHECK(b->dim() == 6);
  CHECK(linalg::spectral_norm(b->a().topLeftCorner(3, 3) - ctx->a()) <= 1e-14);
  CHECK(linalg::spectral_norm(b->a().topRightCorner(3, 3)) == 0.0);

  const Context other = make_context(semirad::testing::random_positive_definite(rng, 3));
  const SemiOperator x = make_operator(ctx, semirad::testing::random_matrix(rng, 3));
  const SemiOperator y = make_operator(other, semirad::testing::random_matrix(rng, 3));
  try {
    BlockOperator bad(x, x, x, y);
    FAIL("expected ContextMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ContextMismatch);
  }
  CHECK_THROWS_AS(block_bound_lemma24(x, y), Error);
}

TEST_CASE("lemma bound examples") {
  const Context id = identity_context(2);
  const ComplexMatrix zero = ComplexMatrix::Zero(2, 2);
  Rng rng(46);
  const ComplexMatrix t12 = semirad::testing::random_matrix(rng, 2);
  const double n12 = linalg::spectral_norm(t12);
  CHECK(std::abs(block_bound_lemma24(make_operator(id, zero), make_operator(id, t12)) - 0.5 * n12) <= 1e-12);
  const BlockOperator top(make_operator(id, zero), make_operator(id, t12), make_operator(id, zero),
                          make_operator(id, zero));
  CHECK(std::abs(a_numerical_radius(assemble(top)) - 0.5 * n12) <= 1e-6);

  const ComplexMatrix t11 = semirad::testing::random_matrix(rng, 2);
  CHECK(std::abs(block_bound_lemma24(make_operator(id, t11), make_operator(id, zero)) -
                 a_numerical_radius(make_operator(id, t11))) <= 1e-12);

  const ComplexMatrix eye = ComplexMatrix::Identity(2, 2);
  const double bound = block_bound_lemma24(make_operator(id, eye), make_operator(id, eye));
  CHECK(std::abs(bound - 0.5 * (1 + std::sqrt(2.0))) <= 1e-12);
  const BlockOperator ones(make_operator(id, eye), make_operator(id, eye), make_operator(id, zero),
                           make_operator(id, zero));
  CHECK(a_numerical_radius(assemble(ones)) <= bound + 1e-6);
}

TEST_CASE("theorem bounds on the comparison examples") {
  const Context id = identity_context(2);
  const ComplexMatrix zero = ComplexMatrix::Zero(2, 2);
  const ComplexMatrix eye = ComplexMatrix::Identity(2, 2);

  const BlockOperator bp = blocks_of(id, zero, eye, scalar_identity(2, -2.0), zero);
  CHECK(std::abs(block_bound_th25(bp) - 1.5) <= 1e-10);
  const double w_bp = a_numerical_radius(assemble(bp));
  const TOptimum o27 = optimize_t(BlockTheorem::Th27, bp);
  const TOptimum o28 = optimize_t(BlockTheorem::Th28, bp);
  CHECK(o27.value <= 1.5 + 1e-10);
  CHECK(o28.value <= 1.5 + 1e-10);
  CHECK(o27.value >= w_bp - 1e-6);
  CHECK(o28.value >= w_bp - 1e-6);

  CHECK(block_bound_th25(blocks_of(id, zero, zero, zero, zero)) == 0.0);

  const BlockOperator s = blocks_of(id, eye, eye, eye, zero);
  const double golden = 0.5 * (1 + std::sqrt(5.0));
  CHECK(std::abs(block_bound_th27(s, 0.5) - golden) <= 1e-10);
  CHECK(block_bound_th27(s, 0.5) < 0.5 * (2 + std::sqrt(2.0)));
  CHECK(a_numerical_radius(assemble(s)) <= golden + 1e-6);

  const BlockOperator mirrored = blocks_of(id, zero, eye, eye, eye);
  CHECK(std::abs(block_bound_th28(mirrored, 0.5) - golden) <= 1e-10);

  // T11 = T22 = O: the parameter drops out
  Rng rng(47);
  const ComplexMatrix t12 = semirad::testing::random_matrix(rng, 2);
  const ComplexMatrix t21 = semirad::testing::random_matrix(rng, 2);
  const BlockOperator off = blocks_of(id, zero, t12, t21, zero);
  const double half_sum = 0.5 * (linalg::spectral_norm(t12) + linalg::spectral_norm(t21));
  for (double t : {0.0, 0.25, 1.0}) {
    CHECK(std::abs(block_bound_th27(off, t) - half_sum) <= 1e-12);
    CHECK(std::abs(block_bound_th28(off, t) - half_sum) <= 1e-12);
  }
}

TEST_CASE("t must lie in the unit interval") {
  const Context id = identity_context(1);
  const ComplexMatrix one = ComplexMatrix::Identity(1, 1);
  const BlockOperator b = blocks_of(id, one, one, one, one);
  for (double t : {-0.1, 1.5}) {
    try {
      block_bound_th27(b, t);
      FAIL("expected TOutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::TOutOfRange);
    }
    CHECK_THROWS_AS(block_bound_th28(b, t), Error);
  }
}

TEST_CASE("block bounds dominate w_B on random blocks") {
  Rng rng(48);
  for (int trial = 0; trial < 25; ++trial) {
    const auto n = static_cast<Eigen::Index>(rng.index(1, 4));
    const Context ctx = make_context(trial % 5 == 0 && n > 1
                                         ? semirad::testing::random_psd_rank(rng, n, n - 1)
                                         : semirad::testing::random_positive_definite(rng, n));
    auto member = [&] { return semirad::testing::random_member(rng, *ctx); };
    const BlockOperator blocks = blocks_of(ctx, member(), member(), member(), member());
    const MatrixBoundReport rep = matrix_bound_report(blocks);
    CHECK(rep.consistent());
    CHECK(rep.lemma24 >= rep.w_b_top_row - 1e-6);
    CHECK(rep.th25 >= rep.w_b_exact - 1e-6);
    CHECK(rep.th27 >= rep.w_b_exact - 1e-6);
    CHECK(rep.th28 >= rep.w_b_exact - 1e-6);

    for (double t : {0.0, 0.5, 1.0}) {
      CHECK(rep.th27 <= th27_closed_form(rep.ingredients, t) + 1e-10);
      CHECK(rep.th28 <= th28_closed_form(rep.ingredients, t) + 1e-10);
      CHECK(th27_closed_form(rep.ingredients, t) >= rep.w_b_exact - 1e-6);
    }
    CHECK(std::abs(th27_closed_form(rep.ingredients, rep.t_star_27) - rep.th27) <= 1e-12);
  }
}

TEST_CASE("zero top-right-only block attains the lemma bound") {
  Rng rng(49);
  for (int trial = 0; trial < 10; ++trial) {
    const auto n = static_cast<Eigen::Index>(rng.index(1, 5));
    const Context ctx = make_context(semirad::testing::random_positive_definite(rng, n));
    const ComplexMatrix zero = ComplexMatrix::Zero(n, n);
    const SemiOperator t12 = make_operator(ctx, semirad::testing::random_matrix(rng, n));
    const BlockOperator b = blocks_of(ctx, zero, t12.t(), zero, zero);
    const double w_b = a_numerical_radius(assemble(b));
    const double half = 0.5 * a_operator_seminorm(t12);
    CHECK(std::abs(w_b - half) <= 1e-6);
    CHECK(std::abs(block_bound_lemma24(b.t11(), b.t12()) - half) <= 1e-12);
    CHECK(std::abs(block_bound_th25(b) - half) <= 1e-12);
  }
}
