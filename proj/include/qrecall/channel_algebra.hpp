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

#include <array>
#include <cstdint>
#include <optional>

#include "qrecall/quantum_state.hpp"

namespace qrecall {

/// A concrete representation tau = sum_k w_k |v_k><v_k| (columns of `vectors`
/// orthonormal, w_k >= 0). K_tau does not depend on which one is used.
struct SpectralRepresentation {
  RealVector weights;
  Matrix vectors;
};

/// sum_k w_k O_{v_k} rho O_{v_k}^*, evaluated term by term in O(n^3).
Matrix k_tau_sum(const SpectralRepresentation& tau, const Matrix& rho);

/// A second valid spectral representation of `tau`: each group of equal
/// weights (within `degeneracy_tol`) is rotated by a seeded random unitary and
/// every vector picks up a random phase.
SpectralRepresentation random_equivalent_representation(const TraceClassOperator& tau,
                                                        std::uint64_t seed,
                                                        double degeneracy_tol = 1e-12);

struct ChannelDomainReport {
  double trace_value;
  bool in_domain;  // trace_value > tolerance
};

/// K_tau(rho) = sum_k gamma_k O_{h_k} rho O_{h_k}^* with tau = sum_k gamma_k |h_k><h_k|.
class TauChannel {
 public:
  explicit TauChannel(TraceClassOperator tau);

  /// tau = |h><h| with unnormalized h, i.e. K^h(rho) = O_h rho O_h^*.
  static TauChannel pure(const AmplitudeVector& h);

  const TraceClassOperator& tau() const noexcept { return tau_; }
  int n() const noexcept { return tau_.n(); }

  Matrix apply_matrix(const Matrix& rho) const;
  TraceClassOperator apply(const TraceClassOperator& rho, double tol = kDefaultTolerance) const;
  ChannelDomainReport domain(const TraceClassOperator& rho, double tol = kDefaultTolerance) const;
  /// K^_tau(rho) = K_tau(rho) / Tr K_tau(rho). Throws kOutsideDomain when the
  /// trace is <= tol.
  DensityOperator apply_normalized(const TraceClassOperator& rho, double tol = kDefaultTolerance) const;

 private:
  TraceClassOperator tau_;
  SpectralRepresentation representation_;
};

TraceClassOperator k_tau(const TraceClassOperator& tau, const TraceClassOperator& rho,
                         double tol = kDefaultTolerance);
DensityOperator k_tau_hat(const TraceClassOperator& tau, const TraceClassOperator& rho,
                          double tol = kDefaultTolerance);

/// K^j(rho) = U_j rho U_j^*.
DensityOperator shift_channel(GroupIndex j, const DensityOperator& rho);

/// When tau = c |b><b| with |b(k)| constant and nonzero, K^_tau is the unitary
/// channel rho -> U rho U^* with U = O_b / |b(k)|; returns U. Otherwise empty.
std::optional<LinearMap> is_unitary_channel(const TraceClassOperator& tau,
                                            double tol = 1e-9);

/// Channel K^g with g = c / h, c = min_k |h(k)|, so that K^g o K^h = id on
/// states. Throws kNotInvertible if some |h(k)| <= tol.
TauChannel invert_pure_channel(const AmplitudeVector& h, double tol = kDefaultTolerance);

/// t_h : L2(G) -> L2({1,2} x G), (t_h f)(1,k) = h(k) f(k),
/// (t_h f)(2,k) = sqrt(1 - |h(k)|^2) f(k). Flattened branch-major.
class SplittingIsometry {
 public:
  /// Requires ||h|| > 0 and |h(k)| <= 1 + tol; otherwise kInvalidAmplitudes.
  static SplittingIsometry make(const AmplitudeVector& h, double tol = kDefaultTolerance);

  int n() const noexcept { return static_cast<int>(matrix_.cols()); }
  /// 2n x n.
  const Matrix& matrix() const noexcept { return matrix_; }
  Vector apply(const AmplitudeVector& f) const;
  /// E_h^*(rho) = t_h rho t_h^*, a 2n x 2n state on the doubled space.
  Matrix lift(const DensityOperator& rho) const;

 private:
  explicit SplittingIsometry(Matrix matrix) : matrix_(std::move(matrix)) {}

  Matrix matrix_;
};

struct BranchOutcome {
  double probability;
  std::optional<DensityOperator> state;  // empty when probability <= tol
};

/// Projects E_h^*(rho) onto the two branches {1} x G and {2} x G.
std::array<BranchOutcome, 2> branch_channels(const AmplitudeVector& h, const DensityOperator& rho,
                                             double tol = kDefaultTolerance);

}  // namespace qrecall
