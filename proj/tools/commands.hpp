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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrecall/sweep.hpp"
#include "scenario.hpp"

namespace qrecall::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitInvalid = 3;
inline constexpr int kExitImpossible = 4;
inline constexpr int kExitVerifyFailed = 5;

std::string version();

/// "%.17g".
std::string format_double(double x);

/// CSV table of all n^2 outcomes with '#' metadata lines.
std::string probs_table(const Scenario& scenario, Route route, int jobs);

struct EvolveRequest {
  int i = 1;
  int j = 1;
  Route route = Route::kFactorized;
  double round_quantum = 0.0;  // 0 disables rounding
};

/// JSON dump of the conditional memory state. Throws Error(kOutcomeImpossible).
std::string evolve_dump(const Scenario& scenario, const EvolveRequest& request);

struct InvariantResult {
  std::string name;
  double tolerance = 0.0;
  double max_error = 0.0;
  int checked = 0;
  bool failed = false;
};

struct VerifyReport {
  std::vector<InvariantResult> invariants;
  bool passed() const;
  std::vector<std::string> failures() const;
  std::string text() const;
};

/// `tolerance_override`, when set, replaces every invariant's tolerance.
VerifyReport verify_scenario(const Scenario& scenario, std::optional<double> tolerance_override = {});
VerifyReport verify_random(int n, int count, std::uint64_t seed, std::optional<double> tolerance_override = {});

struct SampleResult {
  std::string csv;
  std::string summary;
  double max_deviation = 0.0;
};

SampleResult sample_table(const Scenario& scenario, std::size_t count, std::uint64_t seed, int jobs);

struct BenchRequest {
  std::vector<int> sizes;
  std::vector<Route> routes;
  long max_outcomes = 0;  // 0 evaluates every outcome
  int jobs = 1;
  std::uint64_t seed = 12345;
};

/// One CSV row per (n, route); oracle rows above the oracle limit are omitted
/// and listed in `skipped`.
std::string bench_table(const BenchRequest& request, std::vector<std::string>* skipped);

}  // namespace qrecall::cli
