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
#include <string_view>
#include <vector>

#include "qrecall/teleportation_channel.hpp"

namespace qrecall {

/// Evaluation route for the recognition channel.
enum class Route {
  kFactorized,  // O(n^3) per outcome; the default
  kDirect,      // spectral double sum, O(n^4)
  kOracle,      // dense three-party construction, O(n^9)
};

std::string_view to_string(Route route);
std::optional<Route> parse_route(std::string_view name);

struct OutcomeRecord {
  MeasurementOutcome outcome;
  bool possible;
  std::optional<DensityOperator> state;
};

/// All n^2 outcomes in lexicographic (i, j) order.
struct OutcomeDistribution {
  int n = 0;
  Route route = Route::kFactorized;
  std::vector<OutcomeRecord> records;

  const OutcomeRecord& at(GroupIndex i, GroupIndex j) const;
  std::vector<double> probabilities() const;
  double total_probability() const;
};

/// One outcome through the chosen route.
OutcomeEvaluation evaluate_outcome(Route route, const DensityOperator& rho, const DensityOperator& gamma,
                                   const OrthonormalBasis& basis, GroupIndex i, GroupIndex j,
                                   const LambdaOptions& options = {});

/// Reference sweep: outcomes evaluated one after another.
OutcomeDistribution evaluate_outcomes_serial(const DensityOperator& rho, const DensityOperator& gamma,
                                             const OrthonormalBasis& basis, Route route,
                                             const LambdaOptions& options = {});

/// OpenMP sweep over the n^2 outcomes with `jobs` threads (<= 0 picks
/// default_jobs()). Results are written into fixed slots, so the output is
/// identical to evaluate_outcomes_serial.
OutcomeDistribution evaluate_outcomes(const DensityOperator& rho, const DensityOperator& gamma,
                                      const OrthonormalBasis& basis, Route route,
                                      const LambdaOptions& options = {}, int jobs = 0);

/// QRECALL_JOBS if set to a positive integer, else the OpenMP default.
int default_jobs();

}  // namespace qrecall
