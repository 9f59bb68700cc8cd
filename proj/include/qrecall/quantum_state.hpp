// Copyright 2026 The qrecall Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <vector>

#include "qrecall/group_space.hpp"

namespace qrecall {

/// Positive trace-class operator on the arity-1 or arity-2 space, carrying a
/// spectral decomposition sum_k w_k |v_k><v_k| with orthonormal v_k.
///
/// Zero-weight terms are kept, so an arity-1 operator always has exactly n
/// spectral terms. Eigenvectors of repeated eigenvalues are an arbitrary
/// orthonormal choice; callers must never rely on them individually.
class DensityOperator;
DensityOperator entangle(const DensityOperator& gamma);

class TraceClassOperator {
 public:
  /// Hermitian-checks and eigendecomposes `m`. Eigenvalues in [-tol, 0) are
  /// clamped to zero; anything below -tol raises kNotPositive.
  static TraceClassOperator from_matrix(const LinearMap& m, double tol = kDefaultTolerance);
  /// The null operator on the arity-1 space.
  static TraceClassOperator zero(int n);

  int n() const noexcept { return n_; }
  int arity() const noexcept { return arity_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  LinearMap as_map() const { return LinearMap(n_, arity_, arity_, matrix_); }
  const RealVector& weights() const noexcept { return weights_; }
  /// Column k is the k-th spectral vector.
  const Matrix& eigenvectors() const noexcept { return eigenvectors_; }
  AmplitudeVector eigenvector(Eigen::Index k) const;
  double trace() const noexcept { return weights_.sum(); }

 protected:
  TraceClassOperator(int n, int arity, Matrix matrix, RealVector weights, Matrix eigenvectors);

  static TraceClassOperator decompose(const Matrix& m, int n, int arity, double tol);

  friend class DensityOperator;
  friend DensityOperator entangle(const DensityOperator& gamma);

  int n_;
  int arity_;
  Matrix matrix_;
  RealVector weights_;
  Matrix eigenvectors_;
};

/// Unit-trace positive operator.
class DensityOperator : public TraceClassOperator {
 public:
  /// |f><f| / ||f||^2.
  static DensityOperator from_pure(const AmplitudeVector& f);
  /// sum_k w_k |v_k><v_k| / ||v_k||^2. Weights must be >= 0 and sum to 1
  /// within `tol` (they are renormalized inside that window).
  static DensityOperator from_mixture(std::span<const double> weights,
                                      std::span<const AmplitudeVector> vectors,
                                      double tol = kDefaultTolerance);
  static DensityOperator from_matrix(const LinearMap& m, double tol = kDefaultTolerance);
  static DensityOperator maximally_mixed(int n);
  static DensityOperator delta(GroupIndex k);

 private:
  friend DensityOperator entangle(const DensityOperator& gamma);

  explicit DensityOperator(TraceClassOperator base) : TraceClassOperator(std::move(base)) {}
};

/// Pure state on the flat unit vector n^{-1/2} 1.
DensityOperator kappa(int n);

/// e(gamma) = J gamma J*, the entangled state of the memory pair.
/// The spectral data is (beta_k, J h_k): n terms spanning the diagonal subspace.
DensityOperator entangle(const DensityOperator& gamma);

/// rho (x) e(gamma), built as a direct Kronecker product.
LinearMap three_party_input(const DensityOperator& rho, const DensityOperator& gamma);

/// (1 (x) J)(rho (x) gamma)(1 (x) J*), the isometric-conjugation construction.
LinearMap three_party_input_via_isometry(const DensityOperator& rho, const DensityOperator& gamma);

/// Tr(rho^2).
double purity(const TraceClassOperator& rho);

/// Uhlmann fidelity (Tr sqrt(sqrt(a) b sqrt(a)))^2.
double fidelity(const DensityOperator& a, const DensityOperator& b);

/// Half the trace norm of a - b.
double trace_distance(const Matrix& a, const Matrix& b);

}  // namespace qrecall
