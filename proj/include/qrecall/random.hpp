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

#include <random>

#include "qrecall/measurement_basis.hpp"
#include "qrecall/quantum_state.hpp"

namespace qrecall {

/// Seeded generators for random test and verification instances. All draws
/// go through the caller's engine so runs are reproducible.

/// i.i.d. standard complex Gaussian entries.
Vector random_gaussian_vector(Eigen::Index size, std::mt19937_64& rng);
AmplitudeVector random_amplitudes(int n, int arity, std::mt19937_64& rng);
/// Haar-distributed unitary (QR of a Ginibre matrix with phase correction).
Matrix random_unitary(int n, std::mt19937_64& rng);
/// Normalized Wishart state of the given rank (rank <= 0 means full rank).
DensityOperator random_density(int n, std::mt19937_64& rng, int rank = 0);
/// Random pure state.
DensityOperator random_pure_density(int n, std::mt19937_64& rng);
/// Custom basis from the columns of a Haar unitary.
OrthonormalBasis random_basis(int n, std::mt19937_64& rng);

}  // namespace qrecall
