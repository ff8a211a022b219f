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

#include "semirad/semihilbert.hpp"

#include <cmath>
#include <sstream>

namespace semirad {

namespace {

constexpr double kUnitaryTol = 1e-8;

void require_dim(const PositiveOperator& ctx, Eigen::Index n, const char* what) {
  if (static_cast<std::size_t>(n) != ctx.dim()) {
    std::ostringstream os;
    os << what << " has dimension " << n << ", context has " << ctx.dim();
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
}

double product_scale(const SemiOperator& op) {
  return 1.0 + op.context()->norm() * linalg::spectral_norm(op.t());
}

}  // namespace

Context make_context(const ComplexMatrix& a, const Tolerances& tol) {
  linalg::require_finite(a);
  linalg::require_square(a);
  std::shared_ptr<PositiveOperator> ctx(new PositiveOperator());
  ctx->tol_ = tol;
  ctx->factors_ = linalg::psd_sqrt_and_pinv(a, tol);
  ctx->a_ = linalg::hermitian_part(a);

  const auto& eig = ctx->factors_.eig;
  const Eigen::Index n = a.rows();
  const auto r = static_cast<Eigen::Index>(ctx->factors_.rank);
  // retained eigenvalues are the top r in ascending order
  ctx->range_basis_ = eig.eigenvectors.rightCols(r);
  ctx->range_sqrt_eigs_ = eig.eigenvalues.tail(r).cwiseSqrt();
  ctx->projection_ = ctx->range_basis_ * ctx->range_basis_.adjoint();
  ctx->norm_ = n > 0 ? std::max(std::abs(eig.eigenvalues(0)), std::abs(eig.eigenvalues(n - 1))) : 0.0;
  return ctx;
}

Context identity_context(std::size_t n, const Tolerances& tol) {
  const auto dim = static_cast<Eigen::Index>(n);
  return make_context(ComplexMatrix::Identity(dim, dim), tol);
}

bool same_context(const Context& lhs, const Context& rhs) {
  if (!lhs || !rhs) return false;
  if (lhs == rhs) return true;
  return lhs->a().rows() == rhs->a().rows() && lhs->a() == rhs->a();
}

SemiOperator trusted_operator(const Context& ctx, ComplexMatrix t) {
  SemiOperator op;
  op.ctx_ = ctx;
  op.t_ = std::move(t);
  op.reduced_ = ctx->sqrt() * op.t_ * ctx->sqrt_pinv();
  const RealVector& s = ctx->range_sqrt_eigs();
  const ComplexMatrix& basis = ctx->range_basis();
  op.compact_ = s.asDiagonal() * (basis.adjoint() * op.t_ * basis) * s.cwiseInverse().asDiagonal();
  op.adjoint_ = ctx->pinv() * op.t_.adjoint() * ctx->a();
  return op;
}

SemiOperator make_operator(const Context& ctx, const ComplexMatrix& t) {
  linalg::require_finite(t);
  linalg::require_square(t);
  require_dim(*ctx, t.rows(), "operator");

  const Eigen::Index n = t.rows();
  ComplexMatrix augmented(n, 2 * n);
  augmented << ctx->a(), t.adjoint() * ctx->a();
  const std::size_t rank = linalg::numerical_rank(augmented, ctx->tolerances().rank_tol);
  if (rank > ctx->rank()) {
    throw Error(ErrorCode::NotAAdjointable,
                "operator is not A-adjointable (R(T*A) ⊄ R(A))");
  }
  return trusted_operator(ctx, t);
}

Complex a_inner(const PositiveOperator& ctx, const ComplexVector& x, const ComplexVector& y) {
  require_dim(ctx, x.size(), "vector x");
  require_dim(ctx, y.size(), "vector y");
  // <Ax, y> = y^* A x
  return y.dot(ctx.a() * x);
}

double a_norm_vec(const PositiveOperator& ctx, const ComplexVector& x) {
  require_dim(ctx, x.size(), "vector");
  // ||A^{1/2} x|| avoids the cancellation in sqrt(<Ax, x>)
  return (ctx.sqrt() * x).norm();
}

double a_operator_seminorm(const SemiOperator& op) {
  if (op.compact().size() == 0) return 0.0;
  return linalg::spectral_norm(op.compact());
}

SemiOperator a_adjoint(const SemiOperator& op) {
  return trusted_operator(op.context(), op.adjoint());
}

SemiOperator scaled(const SemiOperator& op, Complex c) {
  return trusted_operator(op.context(), c * op.t());
}

SemiOperator sum(const SemiOperator& lhs, const SemiOperator& rhs) {
  if (!same_context(lhs.context(), rhs.context())) {
    throw Error(ErrorCode::ContextMismatch, "operators live in different contexts");
  }
  return trusted_operator(lhs.context(), lhs.t() + rhs.t());
}

SemiOperator product(const SemiOperator& lhs, const SemiOperator& rhs) {
  if (!same_context(lhs.context(), rhs.context())) {
    throw Error(ErrorCode::ContextMismatch, "operators live in different contexts");
  }
  return trusted_operator(lhs.context(), lhs.t() * rhs.t());
}

SemiOperator re_a(const SemiOperator& op) {
  return trusted_operator(op.context(), 0.5 * (op.t() + op.adjoint()));
}

SemiOperator im_a(const SemiOperator& op) {
  const Complex half_over_i(0.0, -0.5);
  return trusted_operator(op.context(), half_over_i * (op.t() - op.adjoint()));
}

bool is_a_selfadjoint(const SemiOperator& op) {
  const ComplexMatrix at = op.context()->a() * op.t();
  return linalg::hermitian_defect(at) <= op.context()->tolerances().herm_tol * product_scale(op);
}

bool is_a_positive(const SemiOperator& op) {
  if (!is_a_selfadjoint(op)) return false;
  const ComplexMatrix at = linalg::hermitian_part(op.context()->a() * op.t());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(at, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NumericalFailure, "Hermitian eigensolver did not converge");
  }
  return solver.eigenvalues()(0) >= -op.context()->tolerances().herm_tol * product_scale(op);
}

bool is_a_unitary(const SemiOperator& op) {
  const ComplexMatrix& c = op.compact();
  if (c.size() == 0) return true;
  const ComplexMatrix id = ComplexMatrix::Identity(c.rows(), c.cols());
  return linalg::spectral_norm(c.adjoint() * c - id) <= kUnitaryTol &&
         linalg::spectral_norm(c * c.adjoint() - id) <= kUnitaryTol;
}

}  // namespace semirad
