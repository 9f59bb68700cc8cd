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

#include <optional>
#include <string>

#include "qrecall/channel_algebra.hpp"
#include "qrecall/measurement_basis.hpp"
#include "qrecall/quantum_state.hpp"

namespace qrecall {

/// Outcomes with probability at or below this are reported as impossible; the
/// conditional memory state is not formed for them.
inline constexpr double kImpossibleThreshold = 1e-6;

struct LambdaOptions {
  double tolerance = kDefaultTolerance;
  double impossible_threshold = kImpossibleThreshold;
};

struct MeasurementOutcome {
  GroupIndex i;
  GroupIndex j;
  std::string label;  // "z[i,j]"
  double probability;
};

std::string outcome_label(GroupIndex i, GroupIndex j);

/// Probability of measuring z_{i,j} on rho (x) e(gamma):
/// sum_m |b_i(m (+) j)|^2 rho(m (+) j, m (+) j) gamma(m, m).
/// This is the spectral double sum sum_{k,l} alpha_k beta_l ||G_{i,j} g_k (x) h_l||^2
/// collapsed onto the diagonals of rho and gamma, O(n).
double outcome_probability(const DensityOperator& rho, const DensityOperator& gamma,
                           const OrthonormalBasis& basis, GroupIndex i, GroupIndex j);

/// Result of one route for one outcome. `state` is empty exactly when
/// `probability` <= impossible_threshold.
struct OutcomeEvaluation {
  double probability;
  std::optional<DensityOperator> state;
};

struct ConditionalState {
  double probability;
  DensityOperator state;
};

/// Memory state after outcome (i, j) from the normalized spectral sum
/// sum_{k,l} alpha_k beta_l |G_{i,j} g_k (x) h_l><G_{i,j} g_k (x) h_l|. O(n^4).
OutcomeEvaluation evaluate_direct(const DensityOperator& rho, const DensityOperator& gamma,
                                  const OrthonormalBasis& basis, GroupIndex i, GroupIndex j,
                                  const LambdaOptions& options = {});

/// Memory state after outcome (i, j) as K^_gamma o K^j o K^_{|conj b_i><conj b_i|}(rho).
/// The inner channel reduces to B_i^* rho B_i. O(n^3).
OutcomeEvaluation evaluate_factorized(const DensityOperator& rho, const DensityOperator& gamma,
                                      const OrthonormalBasis& basis, GroupIndex i, GroupIndex j,
                                      const LambdaOptions& options = {});

/// Throwing forms of the two routes: kOutcomeImpossible when the outcome
/// probability is at or below the threshold.
ConditionalState lambda_direct(const DensityOperator& rho, const DensityOperator& gamma,
                               const OrthonormalBasis& basis, GroupIndex i, GroupIndex j,
                               const LambdaOptions& options = {});
ConditionalState lambda_factorized(const DensityOperator& rho, const DensityOperator& gamma,
                                   const OrthonormalBasis& basis, GroupIndex i, GroupIndex j,
                                   const LambdaOptions& options = {});

/// Unitary V_{i,j} with Lambda_{i,j}(rho (x) gamma) = V rho V^* for every
/// admissible rho. Exists when gamma is kappa (V = sqrt(n) U_j B_i^*) or a pure
/// flat state |h><h| (V = n O_h U_j B_i^*); empty otherwise. The basis must be
/// flat (kNonFlatBasis).
std::optional<LinearMap> unitary_key(const OrthonormalBasis& basis, GroupIndex i, GroupIndex j,
                                     const DensityOperator& gamma, double tol = 1e-9);

}  // namespace qrecall
