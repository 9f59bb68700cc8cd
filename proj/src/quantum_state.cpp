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

#include "qrecall/quantum_state.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "qrecall/error.hpp"

namespace qrecall {
TraceClassOperator::TraceClassOperator(int n, int arity, Matrix matrix, RealVector weights,
                                       Matrix eigenvectors)
    : n_(n),
      arity_(arity),
      matrix_(std::move(matrix)),
      weights_(std::move(weights)),
      eigenvectors_(std::move(eigenvectors)) {}

TraceClassOperator TraceClassOperator::decompose(const Matrix& m, int n, int arity, double tol) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kDimensionMismatch, "operator must be square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol * scale) {
    throw Error(ErrorCode::kNotHermitian, "operator is not Hermitian (deviation " + std::to_string(asym) + ")");
  }
  Matrix hermitian = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kNotHermitian, "eigendecomposition failed");
  }
  RealVector w = solver.eigenvalues();
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    if (w(k) < -tol * scale) {
      throw Error(ErrorCode::kNotPositive, "negative eigenvalue " + std::to_string(w(k)));
    }
    if (w(k) < 0.0) w(k) = 0.0;
  }
  // Descending order reads naturally in dumps: dominant term first.
  RealVector weights = w.reverse();
  Matrix vectors = solver.eigenvectors().rowwise().reverse();
  return TraceClassOperator(n, arity, std::move(hermitian), std::move(weights), std::move(vectors));
}

TraceClassOperator TraceClassOperator::from_matrix(const LinearMap& m, double tol) {
  if (m.domain_arity() != m.codomain_arity() || m.domain_arity() > 2) {
    throw Error(ErrorCode::kDimensionMismatch, "trace-class operators live on arity 1 or 2");
  }
  return decompose(m.matrix(), m.n(), m.domain_arity(), tol);
}

TraceClassOperator TraceClassOperator::zero(int n) {
  return TraceClassOperator(n, 1, Matrix::Zero(n, n), RealVector::Zero(n), Matrix::Identity(n, n));
}

AmplitudeVector TraceClassOperator::eigenvector(Eigen::Index k) const {
  return AmplitudeVector(n_, arity_, eigenvectors_.col(k));
}

// ---------------------------------------------------------------------------

DensityOperator DensityOperator::from_pure(const AmplitudeVector& f) {
  if (f.arity() > 2) throw Error(ErrorCode::kDimensionMismatch, "states live on arity 1 or 2");
  if (!(f.norm() > 0.0)) throw Error(ErrorCode::kNotUnitTrace, "pure state vector has zero norm");
  const AmplitudeVector unit = f.normalized();
  return from_matrix(LinearMap::outer(unit, unit));
}

DensityOperator DensityOperator::from_mixture(std::span<const double> weights,
                                              std::span<const AmplitudeVector> vectors,
                                              double tol) {
  if (weights.empty() || weights.size() != vectors.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "mixture needs one weight per vector");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw Error(ErrorCode::kNotPositive, "mixture weight " + std::to_string(w) + " < 0");
    total += w;
  }
  if (std::abs(total - 1.0) > tol) {
    throw Error(ErrorCode::kNotUnitTrace, "mixture weights sum to " + std::to_string(total));
  }
  const int n = vectors[0].n();
  const int arity = vectors[0].arity();
  const Eigen::Index d = vectors[0].size();
  Matrix m = Matrix::Zero(d, d);
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (vectors[k].n() != n || vectors[k].arity() != arity) {
      throw Error(ErrorCode::kDimensionMismatch, "mixture vectors differ in shape");
    }
    if (!(vectors[k].norm() > 0.0)) throw Error(ErrorCode::kNotUnitTrace, "mixture vector has zero norm");
    const Vector unit = vectors[k].amplitudes() / vectors[k].norm();
    m += (weights[k] / total) * unit * unit.adjoint();
  }
  return from_matrix(LinearMap(n, arity, arity, std::move(m)), tol);
}

DensityOperator DensityOperator::from_matrix(const LinearMap& m, double tol) {
  TraceClassOperator base = TraceClassOperator::from_matrix(m, tol);
  const double tr = m.matrix().trace().real();
  if (std::abs(tr - 1.0) > tol) {
    throw Error(ErrorCode::kNotUnitTrace, "trace is " + std::to_string(tr));
  }
  return DensityOperator(std::move(base));
}

DensityOperator DensityOperator::maximally_mixed(int n) {
  return from_matrix(LinearMap(n, 1, 1, Matrix::Identity(n, n) / static_cast<double>(n)));
}

DensityOperator DensityOperator::delta(GroupIndex k) { return from_pure(AmplitudeVector::delta(k)); }

DensityOperator kappa(int n) { return DensityOperator::from_pure(AmplitudeVector::ones(n)); }

DensityOperator entangle(const DensityOperator& gamma) {
  if (gamma.arity() != 1) throw Error(ErrorCode::kDimensionMismatch, "e(gamma) needs an arity-1 state");
  const int n = gamma.n();
  const Matrix j = isometry_j(n).matrix();
  Matrix m = j * gamma.matrix() * j.adjoint();
  Matrix vectors = j * gamma.eigenvectors();
  return DensityOperator(TraceClassOperator(n, 2, std::move(m), gamma.weights(), std::move(vectors)));
}

LinearMap three_party_input(const DensityOperator& rho, const DensityOperator& gamma) {
  if (rho.arity() != 1 || gamma.arity() != 1 || rho.n() != gamma.n()) {
    throw Error(ErrorCode::kDimensionMismatch, "rho and gamma must be arity-1 states of equal n");
  }
  return kron(rho.as_map(), entangle(gamma).as_map());
}

LinearMap three_party_input_via_isometry(const DensityOperator& rho, const DensityOperator& gamma) {
  if (rho.arity() != 1 || gamma.arity() != 1 || rho.n() != gamma.n()) {
    throw Error(ErrorCode::kDimensionMismatch, "rho and gamma must be arity-1 states of equal n");
  }
  const int n = rho.n();
  const LinearMap lift = kron(LinearMap::identity(n, 1), isometry_j(n));
  return lift * kron(rho.as_map(), gamma.as_map()) * lift.adjoint();
}

double purity(const TraceClassOperator& rho) { return rho.weights().squaredNorm(); }

double fidelity(const DensityOperator& a, const DensityOperator& b) {
  if (a.n() != b.n() || a.arity() != b.arity()) {
    throw Error(ErrorCode::kDimensionMismatch, "fidelity of states on different spaces");
  }
  const double floor_a = 1e-14 * std::max(1.0, a.weights().maxCoeff());
  const RealVector root_weights =
      a.weights().unaryExpr([floor_a](double w) { return w > floor_a ? std::sqrt(w) : 0.0; });
  const Matrix root = a.eigenvectors() * root_weights.asDiagonal() * a.eigenvectors().adjoint();
  const Matrix inner = root * b.matrix() * root;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (inner + inner.adjoint()), Eigen::EigenvaluesOnly);
  const double floor_inner = 1e-14 * std::max(1.0, solver.eigenvalues().cwiseAbs().maxCoeff());
  double total = 0.0;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    const double e = solver.eigenvalues()(k);
    if (e > floor_inner) total += std::sqrt(e);
  }
  return total * total;
}

double trace_distance(const Matrix& a, const Matrix& b) {
  const Matrix diff = a - b;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (diff + diff.adjoint()), Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace qrecall
