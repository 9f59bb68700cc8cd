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

#include "qrecall/sweep.hpp"

#include "qrecall/error.hpp"
#include "qrecall/oracle.hpp"

namespace qrecall {

std::string_view to_string(Route route) {
  switch (route) {
    case Route::kFactorized: return "factorized";
    case Route::kDirect: return "direct";
    case Route::kOracle: return "oracle";
  }
  return "unknown";
}

std::optional<Route> parse_route(std::string_view name) {
  if (name == "factorized") return Route::kFactorized;
  if (name == "direct") return Route::kDirect;
  if (name == "oracle") return Route::kOracle;
  return std::nullopt;
}

const OutcomeRecord& OutcomeDistribution::at(GroupIndex i, GroupIndex j) const {
  if (i.modulus() != n || j.modulus() != n) {
    throw Error(ErrorCode::kModulusMismatch, "outcome index does not match n");
  }
  return records.at(static_cast<std::size_t>(i.position()) * n + j.position());
}

std::vector<double> OutcomeDistribution::probabilities() const {
  std::vector<double> p;
  p.reserve(records.size());
  for (const auto& r : records) p.push_back(r.outcome.probability);
  return p;
}

double OutcomeDistribution::total_probability() const {
  double total = 0.0;
  for (const auto& r : records) total += r.outcome.probability;
  return total;
}

OutcomeEvaluation evaluate_outcome(Route route, const DensityOperator& rho, const DensityOperator& gamma,
                                   const OrthonormalBasis& basis, GroupIndex i, GroupIndex j,
                                   const LambdaOptions& options) {
  switch (route) {
    case Route::kFactorized: return evaluate_factorized(rho, gamma, basis, i, j, options);
    case Route::kDirect: return evaluate_direct(rho, gamma, basis, i, j, options);
    case Route::kOracle: {
      OracleResult r = oracle_lambda(rho, gamma, basis, i, j,
                                     {options.tolerance, options.impossible_threshold, false});
      return {r.probability, std::move(r.conditional_state)};
    }
  }
  throw std::logic_error("unhandled route");
}

OutcomeDistribution evaluate_outcomes_serial(const DensityOperator& rho, const DensityOperator& gamma,
                                             const OrthonormalBasis& basis, Route route,
                                             const LambdaOptions& options) {
  const int n = basis.n();
  OutcomeDistribution dist;
  dist.n = n;
  dist.route = route;
  dist.records.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const GroupIndex gi(i, n), gj(j, n);
      OutcomeEvaluation eval = evaluate_outcome(route, rho, gamma, basis, gi, gj, options);
      const bool possible = eval.state.has_value();
      dist.records.push_back(
          {{gi, gj, outcome_label(gi, gj), eval.probability}, possible, std::move(eval.state)});
    }
  }
  return dist;
}

}  // namespace qrecall
