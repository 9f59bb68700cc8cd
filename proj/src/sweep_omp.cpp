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

#include <omp.h>

#include <cstdlib>
#include <exception>
#include <string>

#include "qrecall/sweep.hpp"

namespace qrecall {

int default_jobs() {
  if (const char* env = std::getenv("QRECALL_JOBS")) {
    try {
      const int jobs = std::stoi(env);
      if (jobs > 0) return jobs;
    } catch (const std::exception&) {
      // fall through to the OpenMP default
    }
  }
  return omp_get_max_threads();
}

OutcomeDistribution evaluate_outcomes(const DensityOperator& rho, const DensityOperator& gamma,
                                      const OrthonormalBasis& basis, Route route,
                                      const LambdaOptions& options, int jobs) {
  const int n = basis.n();
  const int total = n * n;
  if (jobs <= 0) jobs = default_jobs();

  std::vector<std::optional<OutcomeEvaluation>> slots(static_cast<std::size_t>(total));
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (int flat = 0; flat < total; ++flat) {
    try {
      const GroupIndex gi(flat / n + 1, n), gj(flat % n + 1, n);
      slots[flat] = evaluate_outcome(route, rho, gamma, basis, gi, gj, options);
    } catch (...) {
#pragma omp critical(qrecall_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  OutcomeDistribution dist;
  dist.n = n;
  dist.route = route;
  dist.records.reserve(slots.size());
  for (int flat = 0; flat < total; ++flat) {
    const GroupIndex gi(flat / n + 1, n), gj(flat % n + 1, n);
    OutcomeEvaluation& eval = *slots[flat];
    const bool possible = eval.state.has_value();
    dist.records.push_back({{gi, gj, outcome_label(gi, gj), eval.probability}, possible, std::move(eval.state)});
  }
  return dist;
}

}  // namespace qrecall
