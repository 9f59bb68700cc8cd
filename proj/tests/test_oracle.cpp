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

#include <gtest/gtest.h>

#include <vector>

#include "qrecall/error.hpp"
#include "qrecall/oracle.hpp"
#include "qrecall/random.hpp"
#include "test_util.hpp"

namespace qrecall {
namespace {

using testing::idx;
using testing::max_abs;

DensityOperator diagonal_state(const std::vector<double>& weights) {
  const int n = static_cast<int>(weights.size());
  RealVector w(n);
  for (int k = 0; k < n; ++k) w(k) = weights[k];
  return DensityOperator::from_matrix(LinearMap(n, 1, 1, w.cast<Complex>().asDiagonal()));
}

TEST(Oracle, DeltaDiagonalIntermediate) {
  const int n = 3;
  const auto basis = OrthonormalBasis::delta(n);
  const std::vector<double> alpha{0.2, 0.5, 0.3}, beta{0.6, 0.1, 0.3};
  const auto rho = diagonal_state(alpha), gamma = diagonal_state(beta);
  OracleOptions options;
  options.keep_intermediate = true;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const GroupIndex gi(i, n), gj(j, n), s = group_sub(gi, gj);
      const auto r = oracle_lambda(rho, gamma, basis, gi, gj, options);
      const double weight = alpha[i - 1] * beta[s.position()];
      const AmplitudeVector v = tensor(tensor(AmplitudeVector::delta(gi), AmplitudeVector::delta(s)),
                                       AmplitudeVector::delta(s));
      ASSERT_TRUE(r.intermediate.has_value());
      EXPECT_LT(max_abs(r.intermediate->matrix(), weight * LinearMap::outer(v, v).matrix()), 1e-15);
      EXPECT_NEAR(r.probability, weight, 1e-15);
      EXPECT_LT(max_abs(r.conditional_state->matrix(), DensityOperator::delta(s).matrix()), 1e-14);
      EXPECT_LT(oracle_product_form_discrepancy(rho, gamma, basis, gi, gj), 1e-15);
    }
  }
}

TEST(Oracle, DeterministicDeltaCase) {
  const int n = 4;
  const auto basis = OrthonormalBasis::delta(n);
  const auto d = DensityOperator::delta(idx(1, n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const auto r = oracle_lambda(d, d, basis, idx(i, n), idx(j, n));
      const bool hit = (i == 1 && j == n);
      EXPECT_EQ(r.probability, hit ? 1.0 : 0.0);
      EXPECT_EQ(r.conditional_state.has_value(), hit);
    }
  }
}

TEST(Oracle, ConstructionsAgreeAndProbabilityMatchesClosedForm) {
  auto rng = testing::make_rng(90);
  for (int n = 2; n <= 4; ++n) {
    const auto basis = random_basis(n, rng);
    for (int trial = 0; trial < 3; ++trial) {
      const auto rho = random_density(n, rng), gamma = random_density(n, rng);
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          const auto r = oracle_lambda(rho, gamma, basis, idx(i, n), idx(j, n));
          EXPECT_LT(r.construction_discrepancy, 1e-13);
          EXPECT_NEAR(r.probability, outcome_probability(rho, gamma, basis, idx(i, n), idx(j, n)), 1e-12);
          EXPECT_FALSE(r.intermediate.has_value());
        }
      }
    }
  }
}

TEST(Oracle, ProductFormPureInputs) {
  auto rng = testing::make_rng(91);
  for (int n = 2; n <= 4; ++n) {
    const auto basis = OrthonormalBasis::fourier(n);
    const auto rho = random_pure_density(n, rng), gamma = random_pure_density(n, rng);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        EXPECT_LT(oracle_product_form_discrepancy(rho, gamma, basis, idx(i, n), idx(j, n)), 1e-10);
  }
}

TEST(Oracle, ProductFormMixedInputs) {
  auto rng = testing::make_rng(92);
  const int n = 4;
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const auto basis = random_basis(n, rng);
    const auto rho = random_density(n, rng), gamma = random_density(n, rng);
    const GroupIndex i = testing::random_index(n, rng), j = testing::random_index(n, rng);
    worst = std::max(worst, oracle_product_form_discrepancy(rho, gamma, basis, i, j));
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(Oracle, DimensionGuards) {
  for (auto [n, product] : {std::pair{13, false}, std::pair{9, true}}) {
    const auto basis = OrthonormalBasis::delta(n);
    try {
      if (product) oracle_product_form_discrepancy(kappa(n), kappa(n), basis, idx(1, n), idx(1, n));
      else oracle_lambda(kappa(n), kappa(n), basis, idx(1, n), idx(1, n));
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kDimensionTooLarge);
    }
  }
}

}  // namespace
}  // namespace qrecall
