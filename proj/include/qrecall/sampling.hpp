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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "qrecall/sweep.hpp"

namespace qrecall {

/// Counter-based uniform draw in [0, 1): the value depends only on
/// (seed, index), through two rounds of the SplitMix64 finalizer.
double uniform_draw(std::uint64_t seed, std::uint64_t index);

/// Inverse-CDF sampling over `weights` (need not be normalized; zero entries
/// are never drawn). Draw t uses uniform_draw(seed, t).
std::vector<std::size_t> sample_indices(std::span<const double> weights, std::uint64_t seed,
                                        std::size_t count);

struct RecognitionEvent {
  std::size_t trial;
  MeasurementOutcome outcome;
  std::shared_ptr<const DensityOperator> state;
};

/// Repeated recognition: `count` i.i.d. outcomes drawn from the outcome
/// distribution of rho (x) e(gamma), each paired with its memory state.
/// Impossible outcomes (probability <= threshold) are excluded from the draw.
std::vector<RecognitionEvent> recognize(const DensityOperator& rho, const DensityOperator& gamma,
                                        const OrthonormalBasis& basis, std::uint64_t seed,
                                        std::size_t count, const LambdaOptions& options = {},
                                        int jobs = 1);

/// Sampling weights for a distribution: probabilities with impossible outcomes zeroed.
std::vector<double> sampling_weights(const OutcomeDistribution& dist);

}  // namespace qrecall
