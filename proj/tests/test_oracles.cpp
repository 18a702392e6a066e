// Copyright 2026 The eofbound Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include <gtest/gtest.h>

#include "eofbound/oracles.hpp"

namespace eofb {
namespace {

constexpr double kEofAtHalfConcurrence = 0.3545789026652699;  // mpmath, 30 digits

TEST(Wootters, Concurrence) {
  EXPECT_NEAR(wootters_concurrence(make_maximally_entangled(2, 2).density()), 1.0, 1e-12);
  EXPECT_NEAR(wootters_concurrence(make_random_product({2, 2}, 4)), 0.0, 1e-12);
  // closed form on the Werner family: C = max(0, (3p - 1)/2)
  for (int i = 0; i <= 20; ++i) {
    const double p = i / 20.0;
    EXPECT_NEAR(wootters_concurrence(make_werner_2x2(p)), std::max(0.0, (3 * p - 1) / 2), 1e-10)
        << "p=" << p;
  }
  EXPECT_THROW(wootters_concurrence(make_isotropic(3, 0.5)), Error);
}

TEST(Wootters, EntanglementOfFormation) {
  EXPECT_NEAR(eof_from_concurrence(1.0), 1.0, 1e-15);
  EXPECT_EQ(eof_from_concurrence(0.0), 0.0);
  EXPECT_NEAR(eof_from_concurrence(0.5), kEofAtHalfConcurrence, 1e-15);
  EXPECT_NEAR(wootters_eof(make_maximally_entangled(2, 2).density()), 1.0, 1e-10);
}

TEST(Wootters, InvariantUnderLocalUnitaries) {
  Rng rng(12);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DensityMatrix rho = random_density_matrix({2, 2}, 2, seed);
    const DensityMatrix moved = apply_local_unitary(rho, random_unitary(2, rng), random_unitary(2, rng));
    EXPECT_NEAR(wootters_concurrence(moved), wootters_concurrence(rho), 1e-9);
  }
}

TEST(Ensembles, ReconstructRho) {
  Rng rng(21);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const BipartiteDims dims(2 + int(seed % 2), 2 + int(seed % 3));
    const int rank = 1 + int(seed % dims.total());
    const DensityMatrix rho = random_density_matrix(dims, rank, seed);
    const ComplexMatrix scaled = scaled_eigenvectors(rho);
    ASSERT_EQ(scaled.cols(), rank);
    const int k = rank + int(seed % 3);
    const Ensemble e = ensemble_from_isometry(scaled, random_isometry(k, rank, rng));
    ComplexMatrix sum = ComplexMatrix::Zero(rho.matrix().rows(), rho.matrix().cols());
    double total = 0.0;
    for (int i = 0; i < k; ++i) {
      sum += e.weights[std::size_t(i)] * e.states.col(i) * e.states.col(i).adjoint();
      total += e.weights[std::size_t(i)];
    }
    EXPECT_LT((sum - rho.matrix()).norm(), 1e-10);
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(ConvexRoof, PureStateIsExact) {
  const PureState psi = random_pure_state({3, 4}, 8);
  ConvexRoofOptions opts;
  opts.iterations = 1;
  EXPECT_NEAR(convex_roof_upper_estimate(psi.density(), opts), entropy_of_entanglement(psi), 1e-10);
  opts.ensemble_size = 5;
  EXPECT_NEAR(convex_roof_upper_estimate(psi.density(), opts), entropy_of_entanglement(psi), 1e-10);
}

TEST(ConvexRoof, SeparableMixtureNearZero) {
  // equal mixture of two product states
  ComplexVector a = ComplexVector::Zero(4);
  ComplexVector b = ComplexVector::Zero(4);
  a(0) = 1.0;
  b(2) = b(3) = 1.0 / std::sqrt(2.0);  // |1>(|0> + |1>)/sqrt2
  const DensityMatrix rho = DensityMatrix::from_matrix(
      {2, 2}, 0.5 * a * a.adjoint() + 0.5 * b * b.adjoint());
  ConvexRoofOptions opts;
  opts.iterations = 500;
  EXPECT_LE(convex_roof_upper_estimate(rho, opts), 1e-3);
  EXPECT_LE(convex_roof_upper_estimate(make_random_product({2, 2}, 5), opts), 1e-3);
}

TEST(ConvexRoof, WernerMatchesWootters) {
  const DensityMatrix rho = make_werner_2x2(0.8);
  const double upper = convex_roof_upper_estimate(rho, {});
  const double exact = wootters_eof(rho);
  EXPECT_GE(upper, exact - 1e-6);
  EXPECT_LE(upper, exact + 5e-3);
}

TEST(ConvexRoof, NonincreasingInIterations) {
  const DensityMatrix rho = random_density_matrix({2, 3}, 3, 44);
  ConvexRoofOptions opts;
  opts.restarts = 3;
  double prev = std::numeric_limits<double>::infinity();
  for (int iters : {1, 10, 100, 400}) {
    opts.iterations = iters;
    const double v = convex_roof_upper_estimate(rho, opts);
    EXPECT_LE(v, prev);
    prev = v;
  }
}

TEST(ConvexRoof, DeterministicAcrossThreading) {
  const DensityMatrix rho = random_density_matrix({2, 2}, 3, 45);
  ConvexRoofOptions opts;
  opts.iterations = 200;
  const double par = convex_roof_upper_estimate(rho, opts);
  opts.parallel = false;
  EXPECT_EQ(par, convex_roof_upper_estimate(rho, opts));
}

TEST(ConvexRoof, Errors) {
  const DensityMatrix rho = random_density_matrix({2, 2}, 3, 1);
  ConvexRoofOptions opts;
  opts.ensemble_size = 2;
  try {
    convex_roof_upper_estimate(rho, opts);
    FAIL() << "expected RankDeficiency";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RankDeficiency);
  }
  opts.ensemble_size = 0;
  opts.iterations = 0;
  EXPECT_THROW(convex_roof_upper_estimate(rho, opts), Error);
}

TEST(ConvexRoofProperty, UpperBoundsWootters) {
  ConvexRoofOptions opts;
  opts.iterations = 50;
  opts.restarts = 2;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const DensityMatrix rho = random_density_matrix({2, 2}, 1 + int(seed % 4), seed);
    opts.seed = seed;
    EXPECT_GE(convex_roof_upper_estimate(rho, opts), wootters_eof(rho) - 1e-6);
  }
}

TEST(Sandwich, Examples) {
  const SandwichResult bell = sandwich(make_maximally_entangled(2, 2).density());
  EXPECT_NEAR(bell.lower_bits, 1.0, 1e-12);
  EXPECT_NEAR(bell.upper_bits, 1.0, 1e-12);
  EXPECT_EQ(bell.ensemble_size, 3);

  const SandwichResult iso = sandwich(make_isotropic(2, 0.9));
  EXPECT_LE(iso.gap_bits, 5e-3);
  EXPECT_GE(iso.gap_bits, -1e-6);
  EXPECT_EQ(iso.gap_bits, iso.upper_bits - iso.lower_bits);

  ConvexRoofOptions opts;
  opts.iterations = 100;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    opts.seed = seed;
    const SandwichResult r = sandwich(random_density_matrix({2, 2}, 2, seed), opts);
    EXPECT_GE(r.gap_bits, -1e-6);
  }
}

}  // namespace
}  // namespace eofb
