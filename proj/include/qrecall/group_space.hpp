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
#include <variant>

#include "qrecall/types.hpp"

namespace qrecall {

/// Element of the cyclic group G = {1, ..., n}.
///
/// Stored as a residue in {0, ..., n-1}; the externally visible value is
/// 1-based, with residue 0 shown as n (n is the neutral element).
class GroupIndex {
 public:
  /// `value` is 1-based, 1 <= value <= modulus.
  GroupIndex(int value, int modulus);

  static GroupIndex from_residue(int residue, int modulus);

  int value() const noexcept { return residue_ == 0 ? modulus_ : residue_; }
  int residue() const noexcept { return residue_; }
  int modulus() const noexcept { return modulus_; }
  /// Storage offset of this element in amplitude arrays: value() - 1.
  int position() const noexcept { return value() - 1; }

  bool operator==(const GroupIndex&) const = default;

 private:
  GroupIndex() = default;

  int residue_ = 0;
  int modulus_ = 1;
};

/// k (+) l = (k + l) mod n.
GroupIndex group_add(GroupIndex k, GroupIndex l);
/// Inverse of group_add: group_add(group_sub(k, l), l) == k.
GroupIndex group_sub(GroupIndex k, GroupIndex l);

inline GroupIndex operator+(GroupIndex k, GroupIndex l) { return group_add(k, l); }
inline GroupIndex operator-(GroupIndex k, GroupIndex l) { return group_sub(k, l); }

/// Complex function on G, G^2 or G^3. Flattening is row-major over (k, l, m).
class AmplitudeVector {
 public:
  AmplitudeVector(int n, int arity, Vector amplitudes);

  static AmplitudeVector zero(int n, int arity);
  /// The constant function 1 on G.
  static AmplitudeVector ones(int n);
  /// Delta_k(m) = delta_{k,m}.
  static AmplitudeVector delta(GroupIndex k);

  int n() const noexcept { return n_; }
  int arity() const noexcept { return arity_; }
  Eigen::Index size() const noexcept { return amplitudes_.size(); }
  const Vector& amplitudes() const noexcept { return amplitudes_; }

  Complex operator()(GroupIndex k) const;
  Complex operator()(GroupIndex k, GroupIndex l) const;
  Complex operator()(GroupIndex k, GroupIndex l, GroupIndex m) const;

  double squared_norm() const { return amplitudes_.squaredNorm(); }
  double norm() const { return amplitudes_.norm(); }
  /// <this, other>, conjugate-linear in the first argument.
  Complex inner(const AmplitudeVector& other) const;
  AmplitudeVector conjugate() const;
  AmplitudeVector normalized() const;

  AmplitudeVector operator+(const AmplitudeVector& other) const;
  AmplitudeVector operator*(Complex scale) const;

 private:
  int n_;
  int arity_;
  Vector amplitudes_;
};

/// Dense operator between the spaces over G^domain_arity and G^codomain_arity.
class LinearMap {
 public:
  LinearMap(int n, int domain_arity, int codomain_arity, Matrix entries);

  static LinearMap identity(int n, int arity);
  /// |ket><bra|.
  static LinearMap outer(const AmplitudeVector& ket, const AmplitudeVector& bra);

  int n() const noexcept { return n_; }
  int domain_arity() const noexcept { return domain_arity_; }
  int codomain_arity() const noexcept { return codomain_arity_; }
  const Matrix& matrix() const noexcept { return entries_; }

  LinearMap adjoint() const;
  /// Requires domain_arity == codomain_arity.
  Complex trace() const;
  AmplitudeVector apply(const AmplitudeVector& f) const;
  bool is_unitary(double tol = kDefaultTolerance) const;

  LinearMap operator*(const LinearMap& rhs) const;

 private:
  int n_;
  int domain_arity_;
  int codomain_arity_;
  Matrix entries_;
};

/// Multiplication operator (O_g f)(k) = g(k) f(k).
LinearMap mult_op(const AmplitudeVector& g);

/// Shift unitary (U_k f)(m) = f(k (+) m).
LinearMap shift_op(GroupIndex k);

/// Diagonal embedding (J f)(k, l) = f(k) delta_{k,l}.
AmplitudeVector embed_j(const AmplitudeVector& f);

/// Diagonal restriction (J* Phi)(k) = Phi(k, k).
AmplitudeVector restrict_jstar(const AmplitudeVector& phi);

/// J as an operator from the arity-1 into the arity-2 space.
LinearMap isometry_j(int n);

/// f (x) g (k, l) = f(k) g(l). Combined arity must not exceed 3.
AmplitudeVector tensor(const AmplitudeVector& f, const AmplitudeVector& g);
LinearMap kron(const LinearMap& a, const LinearMap& b);

/// Tr_{1,2}: traces out the first two factors of an arity-3 endomorphism.
LinearMap trace_out_first_two(const LinearMap& m);

/// keep = {3} returns Tr_{1,2}(m); keep = {} returns the full trace.
/// Any other keep set raises kUnsupportedKeepSet.
std::variant<LinearMap, Complex> partial_trace(const LinearMap& m, std::span<const int> keep);

}  // namespace qrecall
