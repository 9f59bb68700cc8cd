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

#include <string_view>

#include "qrecall/group_space.hpp"

namespace qrecall {

enum class BasisKind { kDelta, kFourier, kCustom };

std::string_view to_string(BasisKind kind);

/// Orthonormal basis (b_k) of the arity-1 space. Orthonormality is checked at
/// construction; a basis object is always valid.
class OrthonormalBasis {
 public:
  /// Delta_k(m) = delta_{k,m}.
  static OrthonormalBasis delta(int n);
  /// b_j(l) = n^{-1/2} exp(2 pi i j l / n), j, l in {1, ..., n}.
  static OrthonormalBasis fourier(int n);
  /// Column k-1 of `columns` is b_k. Throws kNotOrthonormal when the Gram
  /// matrix differs from the identity by more than `tol` in any entry.
  static OrthonormalBasis custom(const Matrix& columns, double tol = kDefaultTolerance);

  int n() const noexcept { return static_cast<int>(columns_.rows()); }
  BasisKind kind() const noexcept { return kind_; }
  /// |b_j(l)|^2 = 1/n for all j, l.
  bool is_flat() const noexcept { return flat_; }

  const Matrix& columns() const noexcept { return columns_; }
  AmplitudeVector vector(GroupIndex k) const;
  /// B_k = O_{b_k}.
  LinearMap multiplication(GroupIndex k) const;

 private:
  OrthonormalBasis(BasisKind kind, Matrix columns, double tol);

  BasisKind kind_;
  Matrix columns_;
  bool flat_;
};

struct EntangledBasisElement {
  GroupIndex i;
  GroupIndex j;
  AmplitudeVector xi;
};

/// xi_{i,j}(m, r) = b_i(m) delta_{m, r (+) j}.
EntangledBasisElement xi(const OrthonormalBasis& basis, GroupIndex i, GroupIndex j);

/// xi_{i,j} built as (B_i (x) U_j) J 1 from explicit operator matrices.
AmplitudeVector xi_operator_form(const OrthonormalBasis& basis, GroupIndex i, GroupIndex j);

/// Rank-1 projection F_{i,j} = |xi_{i,j}><xi_{i,j}|.
LinearMap proj_f(const OrthonormalBasis& basis, GroupIndex i, GroupIndex j);

/// F_{i,j} Phi = xi_{i,j} * sum_v conj(b_i(v (+) j)) Phi(v (+) j, v), in O(n^2).
AmplitudeVector apply_f(const OrthonormalBasis& basis, GroupIndex i, GroupIndex j,
                        const AmplitudeVector& phi);

/// (G_{i,j} Phi)(m) = conj(b_i(m (+) j)) Phi(m (+) j, m).
///
/// G_{i,j} = J* (U_j B_i* (x) 1) contracts a two-party vector onto the third
/// factor; it is linear but not an isometry.
AmplitudeVector apply_g(const OrthonormalBasis& basis, GroupIndex i, GroupIndex j,
                        const AmplitudeVector& phi);

/// ||G_{i,j} Phi||^2 = sum_m |b_i(m (+) j)|^2 |Phi(m (+) j, m)|^2.
double g_norm_squared(const OrthonormalBasis& basis, GroupIndex i, GroupIndex j,
                      const AmplitudeVector& phi);

/// G_{i,j} as an explicit n x n^2 matrix, composed from J*, U_j and B_i*.
LinearMap g_operator(const OrthonormalBasis& basis, GroupIndex i, GroupIndex j);

}  // namespace qrecall
