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

#include "qrecall/measurement_basis.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qrecall/error.hpp"

namespace qrecall {
namespace {

void check_pair(const OrthonormalBasis& basis, GroupIndex i, GroupIndex j) {
  if (i.modulus() != basis.n() || j.modulus() != basis.n()) {
    throw Error(ErrorCode::kModulusMismatch, "outcome index does not match basis dimension");
  }
}

void check_two_party(const OrthonormalBasis& basis, const AmplitudeVector& phi) {
  if (phi.arity() != 2 || phi.n() != basis.n()) {
    throw Error(ErrorCode::kDimensionMismatch, "expected an arity-2 vector over the basis dimension");
  }
}

}  // namespace

std::string_view to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::kDelta: return "delta";
    case BasisKind::kFourier: return "fourier";
    case BasisKind::kCustom: return "custom";
  }
  return "unknown";
}

OrthonormalBasis::OrthonormalBasis(BasisKind kind, Matrix columns, double tol)
    : kind_(kind), columns_(std::move(columns)), flat_(false) {
  const Eigen::Index n = columns_.rows();
  if (n < 1 || columns_.cols() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "basis matrix must be square and non-empty");
  }
  const Matrix gram = columns_.adjoint() * columns_;
  const double err = (gram - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (!(err <= tol)) {
    throw Error(ErrorCode::kNotOrthonormal,
                "basis Gram matrix deviates from identity by " + std::to_string(err));
  }
  const double flat_value = 1.0 / static_cast<double>(n);
  flat_ = (columns_.cwiseAbs2().array() - flat_value).abs().maxCoeff() <= tol;
}

OrthonormalBasis OrthonormalBasis::delta(int n) {
  return OrthonormalBasis(BasisKind::kDelta, Matrix::Identity(n, n), kDefaultTolerance);
}

OrthonormalBasis OrthonormalBasis::fourier(int n) {
  Matrix cols(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 1; j <= n; ++j) {
    for (int l = 1; l <= n; ++l) {
      // Reduce j*l mod n first so the phase argument stays small.
      const double phase = 2.0 * std::numbers::pi * static_cast<double>((j * l) % n) / n;
      cols(l - 1, j - 1) = std::polar(scale, phase);
    }
  }
  return OrthonormalBasis(BasisKind::kFourier, std::move(cols), kDefaultTolerance);
}

OrthonormalBasis OrthonormalBasis::custom(const Matrix& columns, double tol) {
  return OrthonormalBasis(BasisKind::kCustom, columns, tol);
}

AmplitudeVector OrthonormalBasis::vector(GroupIndex k) const {
  if (k.modulus() != n()) throw Error(ErrorCode::kModulusMismatch, "basis index modulus mismatch");
  return AmplitudeVector(n(), 1, columns_.col(k.position()));
}

LinearMap OrthonormalBasis::multiplication(GroupIndex k) const { return mult_op(vector(k)); }

EntangledBasisElement xi(const OrthonormalBasis& basis, GroupIndex i, GroupIndex j) {
  check_pair(basis, i, j);
  const int n = basis.n();
  Vector out = Vector::Zero(Eigen::Index(n) * n);
  for (int r = 1; r <= n; ++r) {
    const GroupIndex rr(r, n);
    const GroupIndex m = group_add(rr, j);
    out(Eigen::Index(m.position()) * n + rr.position()) = basis.columns()(m.position(), i.position());
  }
  return {i, j, AmplitudeVector(n, 2, std::move(out))};
}

AmplitudeVector xi_operator_form(const OrthonormalBasis& basis, GroupIndex i, GroupIndex j) {
  check_pair(basis, i, j);
  const LinearMap op = kron(basis.multiplication(i), shift_op(j)) * isometry_j(basis.n());
  return op.apply(AmplitudeVector::ones(basis.n()));
}

LinearMap proj_f(const OrthonormalBasis& basis, GroupIndex i, GroupIndex j) {
  const auto element = xi(basis, i, j);
  return LinearMap::outer(element.xi, element.xi);
}

AmplitudeVector apply_f(const OrthonormalBasis& basis, GroupIndex i, GroupIndex j,
                        const AmplitudeVector& phi) {
  check_pair(basis, i, j);
  check_two_party(basis, phi);
  const int n = basis.n();
  Complex coefficient = 0.0;
  for (int v = 1; v <= n; ++v) {
    const GroupIndex vv(v, n);
    const GroupIndex u = group_add(vv, j);
    coefficient += std::conj(basis.columns()(u.position(), i.position())) * phi(u, vv);
  }
  return xi(basis, i, j).xi * coefficient;
}

AmplitudeVector apply_g(const OrthonormalBasis& basis, GroupIndex i, GroupIndex j,
                        const AmplitudeVector& phi) {
  check_pair(basis, i, j);
  check_two_party(basis, phi);
  const int n = basis.n();
  Vector out(n);
  for (int m = 1; m <= n; ++m) {
    const GroupIndex mm(m, n);
    const GroupIndex shifted = group_add(mm, j);
    out(mm.position()) = std::conj(basis.columns()(shifted.position(), i.position())) * phi(shifted, mm);
  }
  return AmplitudeVector(n, 1, std::move(out));
}

double g_norm_squared(const OrthonormalBasis& basis, GroupIndex i, GroupIndex j,
                      const AmplitudeVector& phi) {
  check_pair(basis, i, j);
  check_two_party(basis, phi);
  const int n = basis.n();
  double total = 0.0;
  for (int m = 1; m <= n; ++m) {
    const GroupIndex mm(m, n);
    const GroupIndex shifted = group_add(mm, j);
    total += std::norm(basis.columns()(shifted.position(), i.position())) * std::norm(phi(shifted, mm));
  }
  return total;
}

LinearMap g_operator(const OrthonormalBasis& basis, GroupIndex i, GroupIndex j) {
  check_pair(basis, i, j);
  const int n = basis.n();
  const LinearMap first = shift_op(j) * basis.multiplication(i).adjoint();
  return isometry_j(n).adjoint() * kron(first, LinearMap::identity(n, 1));
}

}  // namespace qrecall
