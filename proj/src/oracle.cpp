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

#include "qrecall/oracle.hpp"

#include <string>

#include "qrecall/error.hpp"

namespace qrecall {
namespace {

void guard(int n, int limit) {
  if (n > limit) {
    throw Error(ErrorCode::kDimensionTooLarge,
                "n = " + std::to_string(n) + " exceeds the oracle limit " + std::to_string(limit));
  }
}

// F_{i,j} from the operator form of xi, so the oracle shares no closed form with
// the routes it checks.
LinearMap projection(const OrthonormalBasis& basis, GroupIndex i, GroupIndex j) {
  const AmplitudeVector x = xi_operator_form(basis, i, j);
  return LinearMap::outer(x, x);
}

// Tr_{1,2}(F (x) X) must equal X Tr F = X; checked before each oracle run.
void check_partial_trace(const LinearMap& f, const DensityOperator& probe) {
  const LinearMap reduced = trace_out_first_two(kron(f, probe.as_map()));
  const double err = (reduced.matrix() - probe.matrix()).cwiseAbs().maxCoeff();
  if (err > 1e-9) {
    throw std::logic_error("partial trace sanity identity failed (error " + std::to_string(err) + ")");
  }
}

}  // namespace

OracleResult oracle_lambda(const DensityOperator& rho, const DensityOperator& gamma,
                           const OrthonormalBasis& basis, GroupIndex i, GroupIndex j,
                           const OracleOptions& options) {
  const int n = basis.n();
  guard(n, kOracleMaxDimension);
  if (rho.n() != n || gamma.n() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "rho, gamma and basis must share n");
  }
  const LinearMap f = projection(basis, i, j);
  check_partial_trace(f, rho);

  const LinearMap measure = kron(f, LinearMap::identity(n, 1));
  const LinearMap direct = measure * three_party_input(rho, gamma) * measure;
  const LinearMap lifted = measure * three_party_input_via_isometry(rho, gamma) * measure;
  const double discrepancy = (direct.matrix() - lifted.matrix()).cwiseAbs().maxCoeff();

  const auto total = std::get<Complex>(partial_trace(direct, std::span<const int>{}));
  const int keep_third[] = {3};
  const auto reduced = std::get<LinearMap>(partial_trace(direct, keep_third));

  OracleResult result{total.real(), std::nullopt, std::nullopt, discrepancy};
  if (result.probability > options.impossible_threshold) {
    result.conditional_state = DensityOperator::from_matrix(
        LinearMap(n, 1, 1, reduced.matrix() / result.probability), options.tolerance);
  }
  if (options.keep_intermediate) result.intermediate = direct;
  return result;
}

double oracle_product_form_discrepancy(const DensityOperator& rho, const DensityOperator& gamma,
                                       const OrthonormalBasis& basis, GroupIndex i, GroupIndex j) {
  const int n = basis.n();
  guard(n, kProductFormMaxDimension);
  const LinearMap f = projection(basis, i, j);
  const LinearMap measure = kron(f, LinearMap::identity(n, 1));
  const LinearMap lhs = measure * three_party_input(rho, gamma) * measure;

  const Matrix g = g_operator(basis, i, j).matrix();
  Matrix memory = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < rho.weights().size(); ++k) {
    for (Eigen::Index l = 0; l < gamma.weights().size(); ++l) {
      const Vector w = g * tensor(rho.eigenvector(k), gamma.eigenvector(l)).amplitudes();
      memory += rho.weights()(k) * gamma.weights()(l) * w * w.adjoint();
    }
  }
  const LinearMap rhs = kron(f, LinearMap(n, 1, 1, std::move(memory)));
  return (lhs.matrix() - rhs.matrix()).norm();
}

}  // namespace qrecall
