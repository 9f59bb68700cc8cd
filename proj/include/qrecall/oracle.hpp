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

#include "qrecall/teleportation_channel.hpp"

namespace qrecall {

/// Brute-force evaluation of the recognition channel on the full
/// n^3-dimensional three-party space. Deliberately naive: every operator is
/// materialized and multiplied densely.

/// Largest n the oracle accepts (an n^3 x n^3 complex matrix at n = 12 is ~48 MB,
/// and a handful of them are alive at once).
inline constexpr int kOracleMaxDimension = 12;
/// Largest n for the product-form discrepancy check.
inline constexpr int kProductFormMaxDimension = 8;

struct OracleOptions {
  double tolerance = kDefaultTolerance;
  double impossible_threshold = kImpossibleThreshold;
  bool keep_intermediate = false;
};

struct OracleResult {
  double probability;                               // Tr_{1,2,3} of the intermediate
  std::optional<DensityOperator> conditional_state;  // Tr_{1,2}(intermediate) / probability
  std::optional<LinearMap> intermediate;             // (F (x) 1)(rho (x) e(gamma))(F (x) 1)
  /// Max-entry distance between the Kronecker and the isometric-lift
  /// constructions of the intermediate operator.
  double construction_discrepancy;
};

/// Throws kDimensionTooLarge for n > kOracleMaxDimension.
OracleResult oracle_lambda(const DensityOperator& rho, const DensityOperator& gamma,
                           const OrthonormalBasis& basis, GroupIndex i, GroupIndex j,
                           const OracleOptions& options = {});

/// Frobenius distance between (F (x) 1)(rho (x) e(gamma))(F (x) 1) and
/// F (x) sum_{k,l} alpha_k beta_l |G g_k (x) h_l><G g_k (x) h_l|, with G taken
/// from explicit operator products. Throws kDimensionTooLarge for n > 8.
double oracle_product_form_discrepancy(const DensityOperator& rho, const DensityOperator& gamma,
                                       const OrthonormalBasis& basis, GroupIndex i, GroupIndex j);

}  // namespace qrecall
