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


#include <benchmark/benchmark.h>

#include <random>

#include "qrecall/measurement_basis.hpp"
#include "qrecall/random.hpp"
#include "qrecall/sweep.hpp"

namespace {

using qrecall::Route;

struct Inputs {
  qrecall::DensityOperator rho;
  qrecall::DensityOperator gamma;
  qrecall::OrthonormalBasis basis;
};

Inputs make_inputs(int n) {
  std::mt19937_64 rng(12345);
  auto rho = qrecall::random_density(n, rng);
  auto gamma = qrecall::random_density(n, rng);
  auto basis = qrecall::random_basis(n, rng);
  return {std::move(rho), std::move(gamma), std::move(basis)};
}

void BM_SweepSerial(benchmark::State& state, Route route) {
  const auto in = make_inputs(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qrecall::evaluate_outcomes_serial(in.rho, in.gamma, in.basis, route));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_SweepOpenMP(benchmark::State& state, Route route) {
  const auto in = make_inputs(static_cast<int>(state.range(0)));
  const int jobs = qrecall::default_jobs();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qrecall::evaluate_outcomes(in.rho, in.gamma, in.basis, route, {}, jobs));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
  state.counters["jobs"] = jobs;
}

}  // namespace

BENCHMARK_CAPTURE(BM_SweepSerial, factorized, Route::kFactorized)->RangeMultiplier(2)->Range(2, 32)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SweepOpenMP, factorized, Route::kFactorized)->RangeMultiplier(2)->Range(2, 32)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SweepSerial, direct, Route::kDirect)->RangeMultiplier(2)->Range(2, 16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SweepOpenMP, direct, Route::kDirect)->RangeMultiplier(2)->Range(2, 16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SweepSerial, oracle, Route::kOracle)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SweepOpenMP, oracle, Route::kOracle)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
