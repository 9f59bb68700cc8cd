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
#include "qrecall/measurement_basis.hpp"
#include "qrecall/random.hpp"
#include "test_util.hpp"

namespace qrecall {
namespace {

using testing::idx;
using testing::max_abs;

std::vector<OrthonormalBasis> bases_for(int n, std::mt19937_64& rng) {
  return {OrthonormalBasis::delta(n), OrthonormalBasis::fourier(n), random_basis(n, rng)};
}

// Gram matrix of the n^2 entangled vectors from explicit double sums.
Matrix gram_by_loops(const OrthonormalBasis& basis) {
  const int n = basis.n();
  std::vector<AmplitudeVector> family;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) family.push_back(xi(basis, idx(i, n), idx(j, n)).xi);
  Matrix gram(family.size(), family.size());
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = 0; b < family.size(); ++b) {
      Complex s = 0.0;
      for (Eigen::Index p = 0; p < family[a].size(); ++p) {
        s += std::conj(family[a].amplitudes()(p)) * family[b].amplitudes()(p);
      }
      gram(a, b) = s;
    }
  }
  return gram;
}

TEST(OrthonormalBasis, FlatnessFlags) {
  EXPECT_TRUE(OrthonormalBasis::fourier(5).is_flat());
  EXPECT_FALSE(OrthonormalBasis::delta(5).is_flat());
  EXPECT_TRUE(OrthonormalBasis::delta(1).is_flat());
}

TEST(OrthonormalBasis, CustomRejectsNonOrthonormal) {
  Matrix m = Matrix::Identity(3, 3);
  m(0, 1) = 0.3;
  try {
    OrthonormalBasis::custom(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotOrthonormal);
  }
}

TEST(Xi, DeltaBasisClosedForm) {
  const int n = 5;
  const auto basis = OrthonormalBasis::delta(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const AmplitudeVector expected =
          tensor(AmplitudeVector::delta(idx(i, n)), AmplitudeVector::delta(group_sub(idx(i, n), idx(j, n))));
      EXPECT_EQ(max_abs(xi(basis, idx(i, n), idx(j, n)).xi.amplitudes(), expected.amplitudes()), 0.0);
    }
  }
}

TEST(Xi, NeutralShiftIsDiagonal) {
  auto rng = testing::make_rng(31);
  const int n = 4;
  for (const auto& basis : bases_for(n, rng)) {
    for (int i = 1; i <= n; ++i) {
      const AmplitudeVector x = xi(basis, idx(i, n), idx(n, n)).xi;
      EXPECT_LT(max_abs(x.amplitudes(), embed_j(basis.vector(idx(i, n))).amplitudes()), 1e-15);
    }
  }
}

TEST(Xi, ClosedFormMatchesOperatorForm) {
  auto rng = testing::make_rng(32);
  for (int n = 2; n <= 6; ++n) {
    for (const auto& basis : bases_for(n, rng)) {
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          const auto closed = xi(basis, idx(i, n), idx(j, n)).xi.amplitudes();
          const auto composed = xi_operator_form(basis, idx(i, n), idx(j, n)).amplitudes();
          EXPECT_LT(max_abs(closed, composed), 1e-14);
          EXPECT_NEAR(xi(basis, idx(i, n), idx(j, n)).xi.norm(), 1.0, 1e-14);
        }
      }
    }
  }
}

TEST(Xi, FourierGramIsIdentity) {
  const Matrix gram = gram_by_loops(OrthonormalBasis::fourier(4));
  EXPECT_LT(max_abs(gram, Matrix::Identity(16, 16)), 1e-10);
}

TEST(Xi, EntangledFamilyIsOrthonormalForAllBases) {
  auto rng = testing::make_rng(33);
  for (int n = 2; n <= 8; ++n) {
    for (const auto& basis : bases_for(n, rng)) {
      const Matrix gram = gram_by_loops(basis);
      EXPECT_LT(max_abs(gram, Matrix::Identity(n * n, n * n)), 1e-10) << "n=" << n;
    }
  }
}

TEST(ProjF, ProjectionLaws) {
  const int n = 3;
  auto rng = testing::make_rng(34);
  for (const auto& basis : bases_for(n, rng)) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const Matrix f = proj_f(basis, idx(i, n), idx(j, n)).matrix();
        EXPECT_LT(max_abs(f * f, f), 1e-14);
        EXPECT_LT(max_abs(f.adjoint(), f), 1e-15);
      }
    }
  }
}

TEST(ProjF, DeltaBasisPicksOneAmplitude) {
  auto rng = testing::make_rng(35);
  const int n = 4;
  const auto basis = OrthonormalBasis::delta(n);
  const AmplitudeVector phi = random_amplitudes(n, 2, rng);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const GroupIndex gi(i, n), shifted = group_sub(idx(i, n), idx(j, n));
      const AmplitudeVector expected =
          tensor(AmplitudeVector::delta(gi), AmplitudeVector::delta(shifted)) * phi(gi, shifted);
      const AmplitudeVector out = proj_f(basis, gi, idx(j, n)).apply(phi);
      EXPECT_LT(max_abs(out.amplitudes(), expected.amplitudes()), 1e-15);
    }
  }
}

TEST(ProjF, CompletenessFourier) {
  const int n = 5;
  const auto basis = OrthonormalBasis::fourier(n);
  Matrix sum = Matrix::Zero(n * n, n * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) sum += proj_f(basis, idx(i, n), idx(j, n)).matrix();
  EXPECT_LT(max_abs(sum, Matrix::Identity(n * n, n * n)), 1e-10);
}

TEST(ProjF, ActsOnEntangledBasis) {
  const int n = 3;
  auto rng = testing::make_rng(36);
  const auto basis = random_basis(n, rng);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const LinearMap f = proj_f(basis, idx(i, n), idx(j, n));
      for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
          const AmplitudeVector out = f.apply(xi(basis, idx(k, n), idx(l, n)).xi);
          const AmplitudeVector expected = (i == k && j == l) ? xi(basis, idx(i, n), idx(j, n)).xi
                                                              : AmplitudeVector::zero(n, 2);
          EXPECT_LT(max_abs(out.amplitudes(), expected.amplitudes()), 1e-14);
        }
      }
    }
  }
}

TEST(ProjF, ShortcutMatchesMatrix) {
  auto rng = testing::make_rng(37);
  for (int n = 2; n <= 5; ++n) {
    for (const auto& basis : bases_for(n, rng)) {
      const AmplitudeVector phi = random_amplitudes(n, 2, rng);
      const GroupIndex i = testing::random_index(n, rng), j = testing::random_index(n, rng);
      EXPECT_LT(max_abs(apply_f(basis, i, j, phi).amplitudes(), proj_f(basis, i, j).apply(phi).amplitudes()),
                1e-13);
    }
  }
}

TEST(ApplyG, DeltaBasisExample) {
  auto rng = testing::make_rng(38);
  const int n = 4;
  const auto basis = OrthonormalBasis::delta(n);
  const AmplitudeVector phi = random_amplitudes(n, 2, rng);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const GroupIndex gi(i, n), shifted = group_sub(gi, idx(j, n));
      const AmplitudeVector expected = AmplitudeVector::delta(shifted) * phi(gi, shifted);
      EXPECT_LT(max_abs(apply_g(basis, gi, idx(j, n), phi).amplitudes(), expected.amplitudes()), 1e-15);
    }
  }
}

TEST(ApplyG, ProductVectorsThroughRestriction) {
  auto rng = testing::make_rng(39);
  for (int n = 2; n <= 5; ++n) {
    for (const auto& basis : bases_for(n, rng)) {
      const GroupIndex i = testing::random_index(n, rng), j = testing::random_index(n, rng);
      const AmplitudeVector g = random_amplitudes(n, 1, rng), h = random_amplitudes(n, 1, rng);
      const AmplitudeVector moved = (shift_op(j) * mult_op(basis.vector(i).conjugate())).apply(g);
      const AmplitudeVector expected = restrict_jstar(tensor(moved, h));
      EXPECT_LT(max_abs(apply_g(basis, i, j, tensor(g, h)).amplitudes(), expected.amplitudes()), 1e-13);
    }
  }
}

TEST(ApplyG, OperatorFormNormFormulaAndLinearity) {
  auto rng = testing::make_rng(40);
  for (int n = 2; n <= 5; ++n) {
    for (const auto& basis : bases_for(n, rng)) {
      const GroupIndex i = testing::random_index(n, rng), j = testing::random_index(n, rng);
      const AmplitudeVector a = random_amplitudes(n, 2, rng), b = random_amplitudes(n, 2, rng);
      const AmplitudeVector ga = apply_g(basis, i, j, a);
      EXPECT_LT(max_abs(ga.amplitudes(), g_operator(basis, i, j).apply(a).amplitudes()), 1e-13);
      EXPECT_NEAR(g_norm_squared(basis, i, j, a), ga.squared_norm(), 1e-12 * (1.0 + ga.squared_norm()));
      const Complex s(0.3, -1.2);
      const AmplitudeVector combo = apply_g(basis, i, j, a + b * s);
      EXPECT_LT(max_abs(combo.amplitudes(), (ga + apply_g(basis, i, j, b) * s).amplitudes()), 1e-12);
    }
  }
}

TEST(ApplyG, IsNotAnIsometry) {
  auto rng = testing::make_rng(41);
  for (int n = 2; n <= 6; ++n) {
    const auto basis = OrthonormalBasis::fourier(n);
    const AmplitudeVector phi = random_amplitudes(n, 2, rng);
    EXPECT_LT(apply_g(basis, idx(1, n), idx(1, n), phi).norm(), phi.norm());
  }
}

TEST(ApplyG, MeasurementFactorization) {
  // (F (x) 1)(1 (x) J) Phi = xi (x) G Phi, left side from full matrices.
  auto rng = testing::make_rng(42);
  const int n = 4;
  const auto basis = OrthonormalBasis::fourier(n);
  const LinearMap lift = kron(LinearMap::identity(n, 1), isometry_j(n));
  for (int trial = 0; trial < 50; ++trial) {
    const GroupIndex i = testing::random_index(n, rng), j = testing::random_index(n, rng);
    const AmplitudeVector phi = random_amplitudes(n, 2, rng);
    const LinearMap measure = kron(proj_f(basis, i, j), LinearMap::identity(n, 1));
    const AmplitudeVector lhs = (measure * lift).apply(phi);
    const AmplitudeVector rhs = tensor(xi(basis, i, j).xi, apply_g(basis, i, j, phi));
    EXPECT_LT(max_abs(lhs.amplitudes(), rhs.amplitudes()), 1e-12);

    // pointwise form
    const AmplitudeVector x = xi(basis, i, j).xi;
    for (int k = 1; k <= n; ++k) {
      for (int l = 1; l <= n; ++l) {
        for (int m = 1; m <= n; ++m) {
          const GroupIndex kk(k, n), ll(l, n), mm(m, n);
          const GroupIndex s = group_add(mm, j);
          const Complex expected = x(kk, ll) * std::conj(basis.vector(i)(s)) * phi(s, mm);
          EXPECT_LT(std::abs(lhs(kk, ll, mm) - expected), 1e-12);
        }
      }
    }
  }
}

}  // namespace
}  // namespace qrecall
