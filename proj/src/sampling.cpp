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

#include "qrecall/sampling.hpp"

#include <algorithm>

#include "qrecall/error.hpp"

namespace qrecall {
namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

double uniform_draw(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t bits = splitmix64(splitmix64(seed) ^ (index * 0xd1b54a32d192ed03ULL));
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::vector<std::size_t> sample_indices(std::span<const double> weights, std::uint64_t seed,
                                        std::size_t count) {
  std::vector<double> cdf(weights.size());
  double running = 0.0;
  std::size_t last_positive = weights.size();
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights[k] < 0.0) throw Error(ErrorCode::kNotPositive, "negative sampling weight");
    running += weights[k];
    cdf[k] = running;
    if (weights[k] > 0.0) last_positive = k;
  }
  if (count > 0 && !(running > 0.0)) {
    throw Error(ErrorCode::kNotUnitTrace, "sampling weights sum to zero");
  }
  std::vector<std::size_t> draws;
  draws.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    const double u = uniform_draw(seed, t) * running;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t k = static_cast<std::size_t>(it - cdf.begin());
    // u can round onto the final cumulative value.
    if (k >= weights.size()) k = last_positive;
    draws.push_back(k);
  }
  return draws;
}

std::vector<double> sampling_weights(const OutcomeDistribution& dist) {
  std::vector<double> w;
  w.reserve(dist.records.size());
  for (const auto& r : dist.records) w.push_back(r.possible ? r.outcome.probability : 0.0);
  return w;
}

std::vector<RecognitionEvent> recognize(const DensityOperator& rho, const DensityOperator& gamma,
                                        const OrthonormalBasis& basis, std::uint64_t seed,
                                        std::size_t count, const LambdaOptions& options, int jobs) {
  OutcomeDistribution dist = evaluate_outcomes(rho, gamma, basis, Route::kFactorized, options, jobs);
  std::vector<std::shared_ptr<const DensityOperator>> states(dist.records.size());
  for (std::size_t k = 0; k < dist.records.size(); ++k) {
    if (dist.records[k].state) {
      states[k] = std::make_shared<const DensityOperator>(std::move(*dist.records[k].state));
    }
  }
  const auto weights = sampling_weights(dist);
  const auto draws = sample_indices(weights, seed, count);
  std::vector<RecognitionEvent> events;
  events.reserve(count);
  for (std::size_t t = 0; t < draws.size(); ++t) {
    events.push_back({t, dist.records[draws[t]].outcome, states[draws[t]]});
  }
  return events;
}

}  // namespace qrecall
