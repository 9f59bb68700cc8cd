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

#include "qrecall/channel_algebra.hpp"

#include <cmath>
#include <random>
#include <string>

#include "qrecall/error.hpp"
#include "qrecall/random.hpp"

namespace qrecall {
namespace {

void check_same_space(const TraceClassOperator& a, const TraceClassOperator& b) {
  if (a.arity() != 1 || b.arity() != 1 || a.n() != b.n()) {
    throw Error(ErrorCode::kDimensionMismatch, "channel and state must act on the same arity-1 space");
  }
}

}  // namespace

Matrix k_tau_sum(const SpectralRepresentation& tau, const Matrix& rho) {
  if (tau.vectors.rows() != rho.rows() || rho.rows() != rho.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "K_tau dimension mismatch");
  }
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (Eigen::Index k = 0; k < tau.weights.size(); ++k) {
    const double w = tau.weights(k);
    if (w == 0.0) continue;
    const auto h = tau.vectors.col(k);
    out.noalias() += w * (h.asDiagonal() * rho * h.conjugate().asDiagonal());
  }
  return out;
}

SpectralRepresentation random_equivalent_representation(const TraceClassOperator& tau,
                                                        std::uint64_t seed, double degeneracy_tol) {
  std::mt19937_64 rng(seed);
  const RealVector& w = tau.weights();
  Matrix vectors = tau.eigenvectors();
  Eigen::Index start = 0;
  // Weights are sorted descending, so equal weights form contiguous runs.
  while (start < w.size()) {
    Eigen::Index stop = start + 1;
    while (stop < w.size() && std::abs(w(stop) - w(start)) <= degeneracy_tol) ++stop;
    const int block = static_cast<int>(stop - start);
    const Matrix mix = random_unitary(block, rng);
    vectors.middleCols(start, block) = vectors.middleCols(start, block) * mix;
    start = stop;
  }
  return {w, std::move(vectors)};
}

// ---------------------------------------------------------------------------

TauChannel::TauChannel(TraceClassOperator tau)
    : tau_(std::move(tau)), representation_{tau_.weights(), tau_.eigenvectors()} {
  if (tau_.arity() != 1) throw Error(ErrorCode::kDimensionMismatch, "tau must act on the arity-1 space");
}

TauChannel TauChannel::pure(const AmplitudeVector& h) {
  return TauChannel(TraceClassOperator::from_matrix(LinearMap::outer(h, h)));
}

Matrix TauChannel::apply_matrix(const Matrix& rho) const { return k_tau_sum(representation_, rho); }

TraceClassOperator TauChannel::apply(const TraceClassOperator& rho, double tol) const {
  check_same_space(tau_, rho);
  return TraceClassOperator::from_matrix(LinearMap(n(), 1, 1, apply_matrix(rho.matrix())), tol);
}

ChannelDomainReport TauChannel::domain(const TraceClassOperator& rho, double tol) const {
  check_same_space(tau_, rho);
  const double tr = apply_matrix(rho.matrix()).trace().real();
  return {tr, tr > tol};
}

DensityOperator TauChannel::apply_normalized(const TraceClassOperator& rho, double tol) const {
  check_same_space(tau_, rho);
  const Matrix out = apply_matrix(rho.matrix());
  const double tr = out.trace().real();
  if (!(tr > tol)) {
    throw Error(ErrorCode::kOutsideDomain, "Tr K_tau(rho) = " + std::to_string(tr) + " is not positive");
  }
  return DensityOperator::from_matrix(LinearMap(n(), 1, 1, out / tr), tol);
}

TraceClassOperator k_tau(const TraceClassOperator& tau, const TraceClassOperator& rho, double tol) {
  return TauChannel(tau).apply(rho, tol);
}

DensityOperator k_tau_hat(const TraceClassOperator& tau, const TraceClassOperator& rho, double tol) {
  return TauChannel(tau).apply_normalized(rho, tol);
}

DensityOperator shift_channel(GroupIndex j, const DensityOperator& rho) {
  if (rho.arity() != 1 || j.modulus() != rho.n()) {
    throw Error(ErrorCode::kDimensionMismatch, "shift index does not match the state");
  }
  const Matrix u = shift_op(j).matrix();
  return DensityOperator::from_matrix(LinearMap(rho.n(), 1, 1, u * rho.matrix() * u.adjoint()));
}

std::optional<LinearMap> is_unitary_channel(const TraceClassOperator& tau, double tol) {
  if (tau.arity() != 1) return std::nullopt;
  const RealVector& w = tau.weights();
  const double total = w.sum();
  if (!(total > tol)) return std::nullopt;
  if ((total - w(0)) > tol * total) return std::nullopt;  // not rank one
  const Vector b = tau.eigenvectors().col(0);
  const RealVector magnitudes = b.cwiseAbs();
  const double lo = magnitudes.minCoeff();
  const double hi = magnitudes.maxCoeff();
  if (!(lo > tol) || hi - lo > tol) return std::nullopt;
  Vector phases(b.size());
  for (Eigen::Index k = 0; k < b.size(); ++k) phases(k) = b(k) / magnitudes(k);
  return LinearMap(tau.n(), 1, 1, phases.asDiagonal());
}

TauChannel invert_pure_channel(const AmplitudeVector& h, double tol) {
  if (h.arity() != 1) throw Error(ErrorCode::kDimensionMismatch, "pure channel needs an arity-1 vector");
  const double c = h.amplitudes().cwiseAbs().minCoeff();
  if (!(c > tol)) {
    throw Error(ErrorCode::kNotInvertible, "h vanishes somewhere (min |h(k)| = " + std::to_string(c) + ")");
  }
  Vector g(h.size());
  for (Eigen::Index k = 0; k < h.size(); ++k) g(k) = c / h.amplitudes()(k);
  return TauChannel::pure(AmplitudeVector(h.n(), 1, std::move(g)));
}

// ---------------------------------------------------------------------------

SplittingIsometry SplittingIsometry::make(const AmplitudeVector& h, double tol) {
  if (h.arity() != 1) throw Error(ErrorCode::kDimensionMismatch, "t_h needs an arity-1 vector");
  if (!(h.norm() > 0.0)) throw Error(ErrorCode::kInvalidAmplitudes, "||h|| must be positive");
  const int n = h.n();
  Matrix t = Matrix::Zero(2 * Eigen::Index(n), n);
  for (int k = 0; k < n; ++k) {
    const double mag2 = std::norm(h.amplitudes()(k));
    if (mag2 > (1.0 + tol) * (1.0 + tol)) {
      throw Error(ErrorCode::kInvalidAmplitudes, "|h(" + std::to_string(k + 1) + ")| exceeds 1");
    }
    t(k, k) = h.amplitudes()(k);
    t(n + k, k) = std::sqrt(std::max(0.0, 1.0 - mag2));
  }
  return SplittingIsometry(std::move(t));
}

Vector SplittingIsometry::apply(const AmplitudeVector& f) const {
  if (f.arity() != 1 || f.n() != n()) throw Error(ErrorCode::kDimensionMismatch, "t_h domain mismatch");
  return matrix_ * f.amplitudes();
}

Matrix SplittingIsometry::lift(const DensityOperator& rho) const {
  if (rho.arity() != 1 || rho.n() != n()) throw Error(ErrorCode::kDimensionMismatch, "t_h domain mismatch");
  return matrix_ * rho.matrix() * matrix_.adjoint();
}

std::array<BranchOutcome, 2> branch_channels(const AmplitudeVector& h, const DensityOperator& rho,
                                             double tol) {
  const SplittingIsometry t = SplittingIsometry::make(h, tol);
  const Matrix lifted = t.lift(rho);
  const int n = t.n();
  std::array<BranchOutcome, 2> out{BranchOutcome{0.0, std::nullopt}, BranchOutcome{0.0, std::nullopt}};
  for (int branch = 0; branch < 2; ++branch) {
    const Matrix block = lifted.block(Eigen::Index(branch) * n, Eigen::Index(branch) * n, n, n);
    const double p = block.trace().real();
    out[branch].probability = p;
    if (p > tol) out[branch].state = DensityOperator::from_matrix(LinearMap(n, 1, 1, block / p), tol);
  }
  return out;
}

}  // namespace qrecall
