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

#include "qrecall/group_space.hpp"

#include <algorithm>
#include <string>

#include "qrecall/error.hpp"

namespace qrecall {
namespace {

Eigen::Index power(int n, int arity) {
  Eigen::Index result = 1;
  for (int a = 0; a < arity; ++a) result *= n;
  return result;
}

void check_arity(int arity) {
  if (arity < 1 || arity > kMaxArity) {
    throw Error(ErrorCode::kArityOverflow, "arity " + std::to_string(arity) + " outside 1..3");
  }
}

void check_modulus(GroupIndex a, int n) {
  if (a.modulus() != n) {
    throw Error(ErrorCode::kModulusMismatch, "index modulus " + std::to_string(a.modulus()) +
                                                 " does not match dimension " + std::to_string(n));
  }
}

}  // namespace

GroupIndex::GroupIndex(int value, int modulus) {
  if (modulus < 1) {
    throw Error(ErrorCode::kDimensionMismatch, "modulus must be >= 1");
  }
  if (value < 1 || value > modulus) {
    throw Error(ErrorCode::kDimensionMismatch,
                "group index " + std::to_string(value) + " outside 1.." + std::to_string(modulus));
  }
  residue_ = value % modulus;
  modulus_ = modulus;
}

GroupIndex GroupIndex::from_residue(int residue, int modulus) {
  if (modulus < 1) {
    throw Error(ErrorCode::kDimensionMismatch, "modulus must be >= 1");
  }
  GroupIndex g;
  g.residue_ = ((residue % modulus) + modulus) % modulus;
  g.modulus_ = modulus;
  return g;
}

GroupIndex group_add(GroupIndex k, GroupIndex l) {
  check_modulus(l, k.modulus());
  return GroupIndex::from_residue(k.residue() + l.residue(), k.modulus());
}

GroupIndex group_sub(GroupIndex k, GroupIndex l) {
  check_modulus(l, k.modulus());
  return GroupIndex::from_residue(k.residue() - l.residue(), k.modulus());
}

// ---------------------------------------------------------------------------

AmplitudeVector::AmplitudeVector(int n, int arity, Vector amplitudes)
    : n_(n), arity_(arity), amplitudes_(std::move(amplitudes)) {
  check_arity(arity);
  if (n < 1) throw Error(ErrorCode::kDimensionMismatch, "dimension must be >= 1");
  if (amplitudes_.size() != power(n, arity)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(power(n, arity)) + " amplitudes, got " +
                    std::to_string(amplitudes_.size()));
  }
}

AmplitudeVector AmplitudeVector::zero(int n, int arity) {
  check_arity(arity);
  return AmplitudeVector(n, arity, Vector::Zero(power(n, arity)));
}

AmplitudeVector AmplitudeVector::ones(int n) { return AmplitudeVector(n, 1, Vector::Ones(n)); }

AmplitudeVector AmplitudeVector::delta(GroupIndex k) {
  Vector v = Vector::Zero(k.modulus());
  v(k.position()) = 1.0;
  return AmplitudeVector(k.modulus(), 1, std::move(v));
}

Complex AmplitudeVector::operator()(GroupIndex k) const {
  if (arity_ != 1) throw Error(ErrorCode::kDimensionMismatch, "arity-1 access on arity " + std::to_string(arity_));
  check_modulus(k, n_);
  return amplitudes_(k.position());
}

Complex AmplitudeVector::operator()(GroupIndex k, GroupIndex l) const {
  if (arity_ != 2) throw Error(ErrorCode::kDimensionMismatch, "arity-2 access on arity " + std::to_string(arity_));
  check_modulus(k, n_);
  check_modulus(l, n_);
  return amplitudes_(Eigen::Index(k.position()) * n_ + l.position());
}

Complex AmplitudeVector::operator()(GroupIndex k, GroupIndex l, GroupIndex m) const {
  if (arity_ != 3) throw Error(ErrorCode::kDimensionMismatch, "arity-3 access on arity " + std::to_string(arity_));
  check_modulus(k, n_);
  check_modulus(l, n_);
  check_modulus(m, n_);
  return amplitudes_((Eigen::Index(k.position()) * n_ + l.position()) * n_ + m.position());
}

Complex AmplitudeVector::inner(const AmplitudeVector& other) const {
  if (other.n_ != n_ || other.arity_ != arity_) {
    throw Error(ErrorCode::kDimensionMismatch, "inner product of incompatible vectors");
  }
  return amplitudes_.dot(other.amplitudes_);  // Eigen conjugates the left operand
}

AmplitudeVector AmplitudeVector::conjugate() const {
  return AmplitudeVector(n_, arity_, amplitudes_.conjugate());
}

AmplitudeVector AmplitudeVector::normalized() const {
  const double nrm = norm();
  if (nrm == 0.0) throw Error(ErrorCode::kDimensionMismatch, "cannot normalize the zero vector");
  return AmplitudeVector(n_, arity_, amplitudes_ / nrm);
}

AmplitudeVector AmplitudeVector::operator+(const AmplitudeVector& other) const {
  if (other.n_ != n_ || other.arity_ != arity_) {
    throw Error(ErrorCode::kDimensionMismatch, "sum of incompatible vectors");
  }
  return AmplitudeVector(n_, arity_, amplitudes_ + other.amplitudes_);
}

AmplitudeVector AmplitudeVector::operator*(Complex scale) const {
  return AmplitudeVector(n_, arity_, amplitudes_ * scale);
}

// ---------------------------------------------------------------------------

LinearMap::LinearMap(int n, int domain_arity, int codomain_arity, Matrix entries)
    : n_(n), domain_arity_(domain_arity), codomain_arity_(codomain_arity), entries_(std::move(entries)) {
  check_arity(domain_arity);
  check_arity(codomain_arity);
  if (entries_.rows() != power(n, codomain_arity) || entries_.cols() != power(n, domain_arity)) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix shape does not match arities");
  }
}

LinearMap LinearMap::identity(int n, int arity) {
  check_arity(arity);
  const auto d = power(n, arity);
  return LinearMap(n, arity, arity, Matrix::Identity(d, d));
}

LinearMap LinearMap::outer(const AmplitudeVector& ket, const AmplitudeVector& bra) {
  if (ket.n() != bra.n()) throw Error(ErrorCode::kDimensionMismatch, "outer product dimension mismatch");
  return LinearMap(ket.n(), bra.arity(), ket.arity(), ket.amplitudes() * bra.amplitudes().adjoint());
}

LinearMap LinearMap::adjoint() const {
  return LinearMap(n_, codomain_arity_, domain_arity_, entries_.adjoint());
}

Complex LinearMap::trace() const {
  if (domain_arity_ != codomain_arity_) {
    throw Error(ErrorCode::kDimensionMismatch, "trace of a non-square map");
  }
  return entries_.trace();
}

AmplitudeVector LinearMap::apply(const AmplitudeVector& f) const {
  if (f.n() != n_ || f.arity() != domain_arity_) {
    throw Error(ErrorCode::kDimensionMismatch, "vector does not lie in the map's domain");
  }
  return AmplitudeVector(n_, codomain_arity_, entries_ * f.amplitudes());
}

bool LinearMap::is_unitary(double tol) const {
  if (domain_arity_ != codomain_arity_) return false;
  const Matrix gram = entries_.adjoint() * entries_;
  return (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() <= tol;
}

LinearMap LinearMap::operator*(const LinearMap& rhs) const {
  if (rhs.n_ != n_ || rhs.codomain_arity_ != domain_arity_) {
    throw Error(ErrorCode::kDimensionMismatch, "composition of maps with misaligned arities");
  }
  return LinearMap(n_, rhs.domain_arity_, codomain_arity_, entries_ * rhs.entries_);
}

// ---------------------------------------------------------------------------

LinearMap mult_op(const AmplitudeVector& g) {
  if (g.arity() != 1) throw Error(ErrorCode::kDimensionMismatch, "multiplication operator needs arity 1");
  return LinearMap(g.n(), 1, 1, g.amplitudes().asDiagonal());
}

LinearMap shift_op(GroupIndex k) {
  const int n = k.modulus();
  Matrix u = Matrix::Zero(n, n);
  for (int m = 1; m <= n; ++m) {
    const GroupIndex row(m, n);
    u(row.position(), group_add(k, row).position()) = 1.0;
  }
  return LinearMap(n, 1, 1, std::move(u));
}

AmplitudeVector embed_j(const AmplitudeVector& f) {
  if (f.arity() != 1) throw Error(ErrorCode::kDimensionMismatch, "J acts on arity-1 vectors");
  const int n = f.n();
  Vector out = Vector::Zero(Eigen::Index(n) * n);
  for (int k = 0; k < n; ++k) out(Eigen::Index(k) * n + k) = f.amplitudes()(k);
  return AmplitudeVector(n, 2, std::move(out));
}

AmplitudeVector restrict_jstar(const AmplitudeVector& phi) {
  if (phi.arity() != 2) throw Error(ErrorCode::kDimensionMismatch, "J* acts on arity-2 vectors");
  const int n = phi.n();
  Vector out(n);
  for (int k = 0; k < n; ++k) out(k) = phi.amplitudes()(Eigen::Index(k) * n + k);
  return AmplitudeVector(n, 1, std::move(out));
}

LinearMap isometry_j(int n) {
  Matrix j = Matrix::Zero(Eigen::Index(n) * n, n);
  for (int k = 0; k < n; ++k) j(Eigen::Index(k) * n + k, k) = 1.0;
  return LinearMap(n, 1, 2, std::move(j));
}

AmplitudeVector tensor(const AmplitudeVector& f, const AmplitudeVector& g) {
  if (f.n() != g.n()) throw Error(ErrorCode::kDimensionMismatch, "tensor of different dimensions");
  if (f.arity() + g.arity() > kMaxArity) {
    throw Error(ErrorCode::kArityOverflow, "tensor arity exceeds 3");
  }
  const auto& a = f.amplitudes();
  const auto& b = g.amplitudes();
  Vector out(a.size() * b.size());
  for (Eigen::Index p = 0; p < a.size(); ++p) out.segment(p * b.size(), b.size()) = a(p) * b;
  return AmplitudeVector(f.n(), f.arity() + g.arity(), std::move(out));
}

LinearMap kron(const LinearMap& a, const LinearMap& b) {
  if (a.n() != b.n()) throw Error(ErrorCode::kDimensionMismatch, "kron of different dimensions");
  if (a.domain_arity() + b.domain_arity() > kMaxArity ||
      a.codomain_arity() + b.codomain_arity() > kMaxArity) {
    throw Error(ErrorCode::kArityOverflow, "kron arity exceeds 3");
  }
  const Matrix& x = a.matrix();
  const Matrix& y = b.matrix();
  Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
      out.block(r * y.rows(), c * y.cols(), y.rows(), y.cols()) = x(r, c) * y;
    }
  }
  return LinearMap(a.n(), a.domain_arity() + b.domain_arity(),
                   a.codomain_arity() + b.codomain_arity(), std::move(out));
}

LinearMap trace_out_first_two(const LinearMap& m) {
  if (m.domain_arity() != 3 || m.codomain_arity() != 3) {
    throw Error(ErrorCode::kDimensionMismatch, "Tr_{1,2} needs an arity-3 endomorphism");
  }
  const Eigen::Index n = m.n();
  const Eigen::Index outer = n * n;
  Matrix out = Matrix::Zero(n, n);
  for (Eigen::Index kl = 0; kl < outer; ++kl) out += m.matrix().block(kl * n, kl * n, n, n);
  return LinearMap(m.n(), 1, 1, std::move(out));
}

std::variant<LinearMap, Complex> partial_trace(const LinearMap& m, std::span<const int> keep) {
  if (keep.empty()) {
    if (m.domain_arity() != 3 || m.codomain_arity() != 3) {
      throw Error(ErrorCode::kDimensionMismatch, "Tr_{1,2,3} needs an arity-3 endomorphism");
    }
    return m.matrix().trace();
  }
  if (keep.size() == 1 && keep[0] == 3) return trace_out_first_two(m);
  throw Error(ErrorCode::kUnsupportedKeepSet, "only keep={3} and keep={} are supported");
}

}  // namespace qrecall
