// Copyright 2026 The blotto-iu Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "blotto/distributions.h"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "blotto/gamma_solver.h"
#include "blotto/random_stream.h"
#include "test_util.h"

namespace blotto {
namespace {

using testing::RandomGame;
using testing::UniformGame;

MarginalSet MarginalsOf(const GameSpec& s) {
  const auto g = ValidatedGame::Validate(s);
  return UniformTypeMarginals(g, SolveGamma(g).front());
}

TEST(UniformTypeMarginalsTest, SymmetricGameIsUniformOnHalf) {
  const auto m = MarginalsOf(UniformGame(4, 1, 1));
  for (std::size_t i = 0; i < 4; ++i) {
    for (const auto* d : {&m.a[i], &m.b[i]}) {
      EXPECT_DOUBLE_EQ(d->upper(), 0.5);
      EXPECT_EQ(d->mass_at_zero(), 0.0);
    }
  }
}

TEST(UniformTypeMarginalsTest, ConstantSumWeakA) {
  const auto m = MarginalsOf(UniformGame(4, 1, 2));
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(m.b[i].role(), DistributionRole::kStrongB);
    EXPECT_DOUBLE_EQ(m.b[i].upper(), 1.0);
    EXPECT_EQ(m.b[i].mass_at_zero(), 0.0);
    EXPECT_EQ(m.a[i].role(), DistributionRole::kWeakA);
    EXPECT_DOUBLE_EQ(m.a[i].upper(), 1.0);
    EXPECT_DOUBLE_EQ(m.a[i].mass_at_zero(), 0.5);
  }
  EXPECT_DOUBLE_EQ(ProbAllZero(m, Player::kA), 0.0625);
  EXPECT_EQ(ProbAllZero(m, Player::kB), 0.0);
}

TEST(UniformTypeMarginalsTest, StrongBattlefieldsOfA) {
  GameSpec s = UniformGame(3, 1, 1.5);
  s.values_a = {3, 1, 1};
  s.values_b = {1, 1, 3};
  const auto g = ValidatedGame::Validate(s);
  for (const auto& sol : SolveGamma(g)) {
    const auto m = UniformTypeMarginals(g, sol);
    for (std::size_t i = 0; i < g.n(); ++i) {
      if (sol.InOmega(i)) {
        EXPECT_EQ(m.a[i].role(), DistributionRole::kStrongA);
        EXPECT_EQ(m.b[i].role(), DistributionRole::kWeakB);
        EXPECT_DOUBLE_EQ(m.a[i].upper(), g.norm_b()[i] / sol.lambda_b);
      } else {
        EXPECT_EQ(m.b[i].role(), DistributionRole::kStrongB);
        EXPECT_EQ(m.a[i].role(), DistributionRole::kWeakA);
        EXPECT_DOUBLE_EQ(m.b[i].upper(), g.norm_a()[i] / sol.lambda_a);
      }
      EXPECT_EQ(m.a[i].upper(), m.b[i].upper());
    }
    if (!sol.omega_a.empty()) EXPECT_EQ(ProbAllZero(m, Player::kA), 0.0);
  }
}

TEST(UniformTypeDistributionTest, CdfExamples) {
  const UniformTypeDistribution strong(0.0, 1.0, DistributionRole::kStrongA);
  EXPECT_DOUBLE_EQ(strong.Cdf(0.5), 0.5);
  EXPECT_EQ(strong.Cdf(-1.0), 0.0);
  EXPECT_EQ(strong.Cdf(1.0), 1.0);
  EXPECT_EQ(strong.Cdf(2.0), 1.0);
  const UniformTypeDistribution weak(0.5, 1.0, DistributionRole::kWeakA);
  EXPECT_DOUBLE_EQ(weak.Cdf(0.0), 0.5);
  EXPECT_EQ(weak.CdfBelow(0.0), 0.0);
  EXPECT_DOUBLE_EQ(weak.ProbEqual(0.0), 0.5);
  EXPECT_EQ(weak.ProbEqual(0.3), 0.0);
  EXPECT_EQ(weak.Cdf(1.0), 1.0);
  EXPECT_DOUBLE_EQ(weak.Mean(), 0.25);
  EXPECT_DOUBLE_EQ(strong.Mean(), 0.5);
}

TEST(UniformTypeDistributionTest, QuantileExamples) {
  const UniformTypeDistribution d(0.0, 2.0, DistributionRole::kStrongB);
  EXPECT_DOUBLE_EQ(d.Quantile(0.25), 0.5);
  const UniformTypeDistribution point(1.0, 2.0, DistributionRole::kWeakA);
  RandomStream rng(3);
  for (int k = 0; k < 100; ++k) EXPECT_EQ(point.Sample(rng), 0.0);
  const UniformTypeDistribution weak(0.3, 1.0, DistributionRole::kWeakB);
  EXPECT_EQ(weak.Quantile(0.29), 0.0);
  EXPECT_DOUBLE_EQ(weak.Quantile(0.65), 0.5);
}

TEST(UniformTypeDistributionTest, IntervalMass) {
  const UniformTypeDistribution weak(0.5, 2.0, DistributionRole::kWeakA);
  EXPECT_DOUBLE_EQ(weak.Mass({0.0, 1.0, true, true}), 0.75);
  EXPECT_DOUBLE_EQ(weak.Mass({0.0, 1.0, false, true}), 0.25);
  EXPECT_DOUBLE_EQ(weak.Mass({-1.0, 5.0, true, true}), 1.0);
  EXPECT_DOUBLE_EQ(weak.Mass({1.0, 3.0, false, false}), 0.25);
  EXPECT_EQ(weak.Mass({3.0, 4.0, true, true}), 0.0);
  EXPECT_EQ(weak.Mass({1.0, 0.5, true, true}), 0.0);
}

TEST(UniformTypeDistributionTest, SampleMeanWithinThreeStandardErrors) {
  const UniformTypeDistribution d(0.4, 1.5, DistributionRole::kWeakB);
  RandomStream rng(17);
  const int m = 1000000;
  double sum = 0, sum_sq = 0;
  for (int k = 0; k < m; ++k) {
    const double x = d.Sample(rng);
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / m;
  const double var = sum_sq / m - mean * mean;
  EXPECT_NEAR(mean, d.Mean(), 3 * std::sqrt(var / m));
}

TEST(UniformTypeDistributionTest, CdfMonotoneAndBounded) {
  RandomStream rng(8);
  for (int t = 0; t < 100; ++t) {
    const UniformTypeDistribution d(rng.NextUniform(), rng.Uniform(0.1, 4), DistributionRole::kWeakA);
    double prev = 0.0;
    for (double x = -0.5; x < 5; x += 0.01) {
      const double c = d.Cdf(x);
      ASSERT_GE(c, prev);
      ASSERT_LE(c, 1.0);
      prev = c;
    }
    ASSERT_EQ(d.Cdf(d.upper()), 1.0);
    ASSERT_EQ(d.Cdf(0.0), d.mass_at_zero());
  }
}

TEST(UniformTypeMarginalsTest, SupportsBoundedByTwiceLargerBudget) {
  RandomStream rng(31);
  for (int t = 0; t < 300; ++t) {
    const auto g = ValidatedGame::Validate(RandomGame(rng, 3, 40, 10, 5));
    for (const auto& sol : SolveGamma(g)) {
      const auto m = UniformTypeMarginals(g, sol);
      for (std::size_t i = 0; i < g.n(); ++i) {
        ASSERT_LE(m.a[i].upper(), 2 * g.budget_b() * (1 + 1e-12));
        ASSERT_GE(m.a[i].mass_at_zero(), 0.0);
        ASSERT_LT(m.a[i].mass_at_zero(), 1.0);
        ASSERT_GE(m.b[i].mass_at_zero(), 0.0);
        ASSERT_TRUE(m.a[i].mass_at_zero() == 0.0 || m.b[i].mass_at_zero() == 0.0);
      }
    }
  }
}

TEST(ProbAllZeroTest, DecaysGeometricallyInN) {
  double prev = 1.0;
  for (std::size_t n : {4u, 8u, 16u, 32u}) {
    const auto m = MarginalsOf(UniformGame(n, 1, 2));
    const double p = ProbAllZero(m, Player::kA);
    EXPECT_DOUBLE_EQ(p, std::pow(0.5, static_cast<double>(n)));
    // Doubling n at least squares the probability.
    EXPECT_LE(p, prev * prev * (1 + 1e-12));
    prev = p;
  }
}

}  // namespace
}  // namespace blotto
