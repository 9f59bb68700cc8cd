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

#include "qrecall/teleportation_channel.hpp"

#include <cmath>
#include <sstream>

#include "qrecall/error.hpp"

namespace qrecall {
namespace {

void check_inputs(const DensityOperator& rho, const DensityOperator& gamma, const OrthonormalBasis& basis,
                  GroupIndex i, GroupIndex j) {
  if (rho.arity() != 1 || gamma.arity() != 1) {
    throw Error(ErrorCode::kDimensionMismatch, "rho and gamma must be arity-1 states");
  }
  const int n = basis.n();
  if (rho.n() != n || gamma.n() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "rho, gamma and basis must share n");
  }
  if (i.modulus() != n || j.modulus() != n) {
    throw Error(ErrorCode::kModulusMismatch, "outcome index does not match n");
  }
}

std::string impossible_message(GroupIndex i, GroupIndex j, double p) {
  std::ostringstream os;
  os.precision(17);
  os << "outcome " << outcome_label(i, j) << " has probability " << p;
  return os.str();
}

ConditionalState require_state(OutcomeEvaluation eval, GroupIndex i, GroupIndex j) {
  if (!eval.state) throw Error(ErrorCode::kOutcomeImpossible, impossible_message(i, j, eval.probability));
  return {eval.probability, std::move(*eval.state)};
}

}  // namespace

std::string outcome_label(GroupIndex i, GroupIndex j) {
  return "z[" + std::to_string(i.value()) + "," + std::to_string(j.value()) + "]";
}

double outcome_probability(const DensityOperator& rho, const DensityOperator& gamma,
                           const OrthonormalBasis& basis, GroupIndex i, GroupIndex j) {
  check_inputs(rho, gamma, basis, i, j);
  const int n = basis.n();
  double p = 0.0;
  for (int m = 1; m <= n; ++m) {
    const GroupIndex mm(m, n);
    const int s = group_add(mm, j).position();
    p += std::norm(basis.columns()(s, i.position())) * rho.matrix()(s, s).real() *
         gamma.matrix()(mm.position(), mm.position()).real();
  }
  return p;
}

OutcomeEvaluation evaluate_direct(const DensityOperator& rho, const DensityOperator& gamma,
                                  const OrthonormalBasis& basis, GroupIndex i, GroupIndex j,
                                  const LambdaOptions& options) {
  check_inputs(rho, gamma, basis, i, j);
  const int n = basis.n();
  Matrix numerator = Matrix::Zero(n, n);
  double denominator = 0.0;
  for (Eigen::Index k = 0; k < rho.weights().size(); ++k) {
    const double alpha = rho.weights()(k);
    if (alpha == 0.0) continue;
    const AmplitudeVector g = rho.eigenvector(k);
    for (Eigen::Index l = 0; l < gamma.weights().size(); ++l) {
      const double beta = gamma.weights()(l);
      if (beta == 0.0) continue;
      const AmplitudeVector product = tensor(g, gamma.eigenvector(l));
      const Vector w = apply_g(basis, i, j, product).amplitudes();
      numerator.noalias() += (alpha * beta) * w * w.adjoint();
      denominator += alpha * beta * g_norm_squared(basis, i, j, product);
    }
  }
  if (!(denominator > options.impossible_threshold)) return {denominator, std::nullopt};
  return {denominator, DensityOperator::from_matrix(LinearMap(n, 1, 1, numerator / denominator),
                                                    options.tolerance)};
}

OutcomeEvaluation evaluate_factorized(const DensityOperator& rho, const DensityOperator& gamma,
                                      const OrthonormalBasis& basis, GroupIndex i, GroupIndex j,
                                      const LambdaOptions& options) {
  check_inputs(rho, gamma, basis, i, j);
  const int n = basis.n();
  // K_{|conj b_i><conj b_i|}(rho) = B_i^* rho B_i.
  const auto b = basis.columns().col(i.position());
  Matrix filtered = b.conjugate().asDiagonal() * rho.matrix() * b.asDiagonal();
  const double first = filtered.trace().real();
  if (!(first > options.tolerance)) return {first, std::nullopt};
  filtered /= first;

  // K^j: conjugation by the permutation U_j, (U_j X U_j^*)(a, c) = X(j (+) a, j (+) c).
  Matrix shifted(n, n);
  for (int a = 0; a < n; ++a) {
    const int sa = group_add(GroupIndex::from_residue(a + 1, n), j).position();
    for (int c = 0; c < n; ++c) {
      const int sc = group_add(GroupIndex::from_residue(c + 1, n), j).position();
      shifted(a, c) = filtered(sa, sc);
    }
  }

  const Matrix memory = TauChannel(gamma).apply_matrix(shifted);
  const double second = memory.trace().real();
  const double probability = first * second;
  if (!(second > options.tolerance) || !(probability > options.impossible_threshold)) {
    return {probability, std::nullopt};
  }
  return {probability, DensityOperator::from_matrix(LinearMap(n, 1, 1, memory / second), options.tolerance)};
}

ConditionalState lambda_direct(const DensityOperator& rho, const DensityOperator& gamma,
                               const OrthonormalBasis& basis, GroupIndex i, GroupIndex j,
                               const LambdaOptions& options) {
  return require_state(evaluate_direct(rho, gamma, basis, i, j, options), i, j);
}

ConditionalState lambda_factorized(const DensityOperator& rho, const DensityOperator& gamma,
                                   const OrthonormalBasis& basis, GroupIndex i, GroupIndex j,
                                   const LambdaOptions& options) {
  return require_state(evaluate_factorized(rho, gamma, basis, i, j, options), i, j);
}

std::optional<LinearMap> unitary_key(const OrthonormalBasis& basis, GroupIndex i, GroupIndex j,
                                     const DensityOperator& gamma, double tol) {
  if (!basis.is_flat()) {
    throw Error(ErrorCode::kNonFlatBasis, "unitary keys are defined for flat bases only");
  }
  const int n = basis.n();
  if (gamma.n() != n || gamma.arity() != 1) {
    throw Error(ErrorCode::kDimensionMismatch, "gamma does not match the basis");
  }
  const LinearMap core = shift_op(j) * basis.multiplication(i).adjoint();
  const double root_n = std::sqrt(static_cast<double>(n));
  if ((gamma.matrix() - kappa(n).matrix()).cwiseAbs().maxCoeff() <= tol) {
    return LinearMap(n, 1, 1, root_n * core.matrix());
  }
  const RealVector& w = gamma.weights();
  if (std::abs(w(0) - 1.0) > tol) return std::nullopt;  // mixed
  const Vector h = gamma.eigenvectors().col(0);
  const double flat = 1.0 / static_cast<double>(n);
  if ((h.cwiseAbs2().array() - flat).abs().maxCoeff() > tol) return std::nullopt;
  return LinearMap(n, 1, 1, static_cast<double>(n) * h.asDiagonal() * core.matrix());
}

}  // namespace qrecall
