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

#include "qrecall/random.hpp"

#include <Eigen/QR>

namespace qrecall {

Vector random_gaussian_vector(Eigen::Index size, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(size);
  for (Eigen::Index k = 0; k < size; ++k) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(k) = Complex(re, im);
  }
  return v;
}

AmplitudeVector random_amplitudes(int n, int arity, std::mt19937_64& rng) {
  Eigen::Index size = 1;
  for (int a = 0; a < arity; ++a) size *= n;
  return AmplitudeVector(n, arity, random_gaussian_vector(size, rng));
}

Matrix random_unitary(int n, std::mt19937_64& rng) {
  Matrix ginibre(n, n);
  for (int c = 0; c < n; ++c) ginibre.col(c) = random_gaussian_vector(n, rng);
  Eigen::HouseholderQR<Matrix> qr(ginibre);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < n; ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(k) *= d / mag;
  }
  return q;
}

DensityOperator random_density(int n, std::mt19937_64& rng, int rank) {
  if (rank <= 0 || rank > n) rank = n;
  Matrix a(n, rank);
  for (int c = 0; c < rank; ++c) a.col(c) = random_gaussian_vector(n, rng);
  Matrix m = a * a.adjoint();
  m /= m.trace().real();
  return DensityOperator::from_matrix(LinearMap(n, 1, 1, std::move(m)));
}

DensityOperator random_pure_density(int n, std::mt19937_64& rng) {
  return DensityOperator::from_pure(random_amplitudes(n, 1, rng));
}

OrthonormalBasis random_basis(int n, std::mt19937_64& rng) {
  return OrthonormalBasis::custom(random_unitary(n, rng));
}

}  // namespace qrecall
