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

#ifndef SEMIRAD_SEMIHILBERT_HPP
#define SEMIRAD_SEMIHILBERT_HPP

#include <cstddef>
#include <memory>

#include "semirad/linalg.hpp"

namespace semirad {

// A positive semidefinite matrix A defining the semi-inner product
// <x, y>_A = <Ax, y>. Factors are computed once at construction.
class PositiveOperator {
public:
  const ComplexMatrix& a() const noexcept { return a_; }
  const ComplexMatrix& pinv() const noexcept { return factors_.pinv; }
  const ComplexMatrix& sqrt() const noexcept { return factors_.sqrt; }
  const ComplexMatrix& sqrt_pinv() const noexcept { return factors_.sqrt_pinv; }
  std::size_t rank() const noexcept { return factors_.rank; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(a_.rows()); }
  double min_pos_eig() const noexcept { return factors_.min_pos_eig; }
  bool strictly_positive() const noexcept { return factors_.rank == dim(); }
  double norm() const noexcept { return norm_; }
  const Tolerances& tolerances() const noexcept { return tol_; }

  /// Orthonormal basis of range(A): eigenvectors of the retained eigenvalues
  /// (n x rank).
  const ComplexMatrix& range_basis() const noexcept { return range_basis_; }
  /// Square roots of the retained eigenvalues, aligned with range_basis().
  const RealVector& range_sqrt_eigs() const noexcept { return range_sqrt_eigs_; }
  /// Orthogonal projection P = A^+ A onto range(A).
  const ComplexMatrix& projection() const noexcept { return projection_; }

private:
  friend std::shared_ptr<const PositiveOperator> make_context(const ComplexMatrix&,
                                                              const Tolerances&);
  PositiveOperator() = default;

  ComplexMatrix a_;
  linalg::PsdFactors factors_;
  ComplexMatrix range_basis_;
  RealVector range_sqrt_eigs_;
  ComplexMatrix projection_;
  double norm_ = 0.0;
  Tolerances tol_;
};

using Context = std::shared_ptr<const PositiveOperator>;

/// Validates A (Hermitian, PSD) and caches its factors.
Context make_context(const ComplexMatrix& a, const Tolerances& tol = {});

Context identity_context(std::size_t n, const Tolerances& tol = {});

/// True when both contexts carry the same matrix A.
bool same_context(const Context& lhs, const Context& rhs);

// An operator T admitting an A-adjoint, i.e. R(T^* A) is contained in R(A).
class SemiOperator {
public:
  const ComplexMatrix& t() const noexcept { return t_; }
  const Context& context() const noexcept { return ctx_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(t_.rows()); }

  /// A^{1/2} T (A^{1/2})^+, n x n.
  const ComplexMatrix& reduced() const noexcept { return reduced_; }
  /// The reduced matrix expressed in the range basis of A (rank x rank).
  /// Its classical norm, numerical range and spectrum-on-range agree with
  /// the A-quantities of T.
  const ComplexMatrix& compact() const noexcept { return compact_; }
  /// The distinguished A-adjoint A^+ T^* A.
  const ComplexMatrix& adjoint() const noexcept { return adjoint_; }

private:
  friend SemiOperator make_operator(const Context&, const ComplexMatrix&);
  friend SemiOperator trusted_operator(const Context&, ComplexMatrix);
  SemiOperator() = default;

  ComplexMatrix t_;
  Context ctx_;
  ComplexMatrix reduced_;
  ComplexMatrix compact_;
  ComplexMatrix adjoint_;
};

/// Checks the range condition rank([A | T^*A]) <= rank(A) and caches the
/// reduced matrix and A-adjoint. Throws NotAAdjointable when it fails.
SemiOperator make_operator(const Context& ctx, const ComplexMatrix& t);

/// Builds an operator whose membership is known by construction (sums,
/// scalar multiples and A-adjoints of members). Skips the rank test.
SemiOperator trusted_operator(const Context& ctx, ComplexMatrix t);

Complex a_inner(const PositiveOperator& ctx, const ComplexVector& x, const ComplexVector& y);
double a_norm_vec(const PositiveOperator& ctx, const ComplexVector& x);

/// ||T||_A, the spectral norm of the compact reduced matrix.
double a_operator_seminorm(const SemiOperator& op);

/// T^{#A} as an operator in the same context.
SemiOperator a_adjoint(const SemiOperator& op);
SemiOperator scaled(const SemiOperator& op, Complex c);
SemiOperator sum(const SemiOperator& lhs, const SemiOperator& rhs);
SemiOperator product(const SemiOperator& lhs, const SemiOperator& rhs);

/// (T + T^{#A}) / 2
SemiOperator re_a(const SemiOperator& op);
/// (T - T^{#A}) / 2i
SemiOperator im_a(const SemiOperator& op);

bool is_a_selfadjoint(const SemiOperator& op);
bool is_a_positive(const SemiOperator& op);
/// Isometry of T and of its A-adjoint on range(A): the compact reduced
/// matrix is unitary within 1e-8.
bool is_a_unitary(const SemiOperator& op);

}  // namespace semirad

#endif  // SEMIRAD_SEMIHILBERT_HPP
