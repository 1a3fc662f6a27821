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

#include "blotto/csf_analysis.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "blotto/csf.h"
#include "blotto/error.h"
#include "blotto/gamma_solver.h"
#include "test_util.h"

namespace blotto {
namespace {

using testing::RandomGame;
using testing::UniformGame;

std::vector<ContestSuccessFunction> BuiltInRules() {
  return {ContestSuccessFunction::Blotto(0.3), ContestSuccessFunction::Power(0.7, 0.4),
          ContestSuccessFunction::Power(5.0, 0.5), ContestSuccessFunction::Logit(0.5, 0.6),
          ContestSuccessFunction::Logit(40.0, 0.2)};
}

TEST(CsfEvaluateTest, Examples) {
  const auto p = ContestSuccessFunction::Power(1.0, 0.5).Evaluate(3, 1);
  EXPECT_DOUBLE_EQ(p.first, 0.75);
  EXPECT_DOUBLE_EQ(p.second, 0.25);
  for (double r : {0.1, 1.0, 100.0}) {
    const auto l = ContestSuccessFunction::Logit(r, 0.35).Evaluate(1.7, 1.7);
    EXPECT_EQ(l.first, 0.35);
    EXPECT_EQ(l.second, 1.0 - 0.35);
  }
  const auto big = ContestSuccessFunction::Power(1e6, 0.5).Evaluate(1.01, 1.0);
  const auto wta = ContestSuccessFunction::Blotto(0.5).Evaluate(1.01, 1.0);
  EXPECT_NEAR(big.first, wta.first, 1e-6);
  EXPECT_NEAR(big.second, wta.second, 1e-6);
  // Saturation far out.
  EXPECT_EQ(ContestSuccessFunction::Logit(1e4, 0.5).ShareA(0.0, 1.0), 0.0);
  EXPECT_EQ(ContestSuccessFunction::Power(2, 0.5).ShareA(0.0, 0.0), 0.5);
  EXPECT_EQ(ContestSuccessFunction::Power(2, 0.5).ShareA(0.0, 1e-300), 0.0);
}

TEST(CsfEvaluateTest, RejectsTrivialAlphaAndBadArguments) {
  EXPECT_THROW(ContestSuccessFunction::Power(1.0, 0.0), Error);
  EXPECT_THROW(ContestSuccessFunction::Logit(1.0, 1.0), Error);
  EXPECT_THROW(ContestSuccessFunction::Logit(0.0, 0.5), Error);
  EXPECT_THROW(ContestSuccessFunction::Blotto(1.5), Error);
  EXPECT_NO_THROW(ContestSuccessFunction::Blotto(1.0));
  EXPECT_THROW(ContestSuccessFunction::Power(1.0, 0.5).Evaluate(-1.0, 1.0), Error);
  const auto bad = ContestSuccessFunction::Custom([](double, double) { return 2.0; }, 0.5, true);
  EXPECT_THROW(bad.Evaluate(1.0, 1.0), Error);
}

TEST(CsfEvaluateTest, SwappedExchangesRoles) {
  RandomStream rng(3);
  auto rules = BuiltInRules();
  rules.push_back(ContestSuccessFunction::Custom(
      [](double x, double y) { return x + y == 0 ? 0.3 : (x * x) / (x * x + y); }, 0.3, true));
  for (const auto& csf : rules) {
    const auto sw = csf.Swapped();
    EXPECT_DOUBLE_EQ(sw.alpha(), 1.0 - csf.alpha());
    for (int k = 0; k < 200; ++k) {
      const double x = rng.Uniform(0, 2), y = k % 10 == 0 ? x : rng.Uniform(0, 2);
      EXPECT_NEAR(sw.ShareA(x, y), csf.ShareB(y, x), 1e-15) << csf.Describe();
    }
  }
}

TEST(CsfAxiomsTest, SharesSumToOne) {
  RandomStream rng(1);
  for (const auto& csf : BuiltInRules()) {
    for (int k = 0; k < 10000; ++k) {
      const double x = rng.NextUniform() < 0.05 ? 0.0 : rng.Uniform(0, 4);
      const double y = rng.NextUniform() < 0.05 ? x : rng.Uniform(0, 4);
      const auto [a, b] = csf.Evaluate(x, y);
      ASSERT_GE(a, 0.0);
      ASSERT_GE(b, 0.0);
      ASSERT_NEAR(a + b, 1.0, 1e-12) << csf.Describe() << " at " << x << ", " << y;
    }
  }
}

TEST(CsfAxiomsTest, MonotoneOnSortedGrids) {
  RandomStream rng(2);
  for (const auto& csf : BuiltInRules()) {
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> grid(100);
      for (auto& v : grid) v = rng.Uniform(0, 3);
      grid[0] = 0.0;
      std::sort(grid.begin(), grid.end());
      const double other = rng.NextUniform() < 0.2 ? grid[50] : rng.Uniform(0, 3);
      for (std::size_t k = 1; k < grid.size(); ++k) {
        ASSERT_GE(csf.ShareA(grid[k], other), csf.ShareA(grid[k - 1], other)) << csf.Describe();
        ASSERT_LE(csf.ShareA(other, grid[k]), csf.ShareA(other, grid[k - 1])) << csf.Describe();
        ASSERT_LE(csf.ShareB(grid[k], other), csf.ShareB(grid[k - 1], other)) << csf.Describe();
        ASSERT_GE(csf.ShareB(other, grid[k]), csf.ShareB(other, grid[k - 1])) << csf.Describe();
      }
    }
  }
}

TEST(CsfAxiomsTest, ConvergesPointwiseToWinnerTakesAll) {
  const std::pair<double, double> points[] = {{1.2, 1.0}, {0.5, 0.8}, {2.0, 0.1}};
  for (const auto& [x, y] : points) {
    for (int kind = 0; kind < 2; ++kind) {
      double prev = 2.0;
      for (double r : {1.0, 10.0, 100.0, 1000.0}) {
        const auto csf = kind == 0 ? ContestSuccessFunction::Power(r, 0.4)
                                   : ContestSuccessFunction::Logit(r, 0.4);
        const double gap = std::fabs(csf.ShareA(x, y) - csf.Blotto(x, y).first);
        EXPECT_LE(gap, prev);
        prev = gap;
      }
      EXPECT_LT(prev, 1e-3);
    }
  }
}

// True when a dense scan of |zeta - beta| >= eps agrees with the set,
// skipping points within 1e-9 of a set boundary.
void ExpectSetMatchesScan(const ContestSuccessFunction& csf, double fixed, double eps, double bound,
                          bool x_side) {
  const auto set = x_side ? DissimilaritySetX(csf, fixed, eps, bound)
                          : DissimilaritySetY(csf, fixed, eps, bound);
  std::vector<double> edges = {fixed};
  if (set.lower) edges.insert(edges.end(), {set.lower->lo, set.lower->hi});
  if (set.upper) edges.insert(edges.end(), {set.upper->lo, set.upper->hi});
  for (int k = 0; k <= 20000; ++k) {
    const double t = bound * k / 20000.0;
    bool near_edge = false;
    for (double e : edges) near_edge |= std::fabs(t - e) < 1e-9 * std::max(1.0, bound);
    if (near_edge) continue;
    const double x = x_side ? t : fixed;
    const double y = x_side ? fixed : t;
    const bool in = std::fabs(csf.ShareA(x, y) - csf.Blotto(x, y).first) >= eps;
    ASSERT_EQ(set.Contains(t), in) << csf.Describe() << " fixed=" << fixed << " t=" << t
                                   << (x_side ? " X" : " Y");
  }
}

TEST(DissimilaritySetTest, PowerAtZeroIsEmpty) {
  EXPECT_TRUE(DissimilaritySetX(ContestSuccessFunction::Power(3, 0.5), 0.0, 0.1, 4).Empty());
  EXPECT_TRUE(DissimilaritySetY(ContestSuccessFunction::Power(3, 0.5), 0.0, 0.1, 4).Empty());
}

TEST(DissimilaritySetTest, LogitHalfWidths) {
  const auto csf = ContestSuccessFunction::Logit(10, 0.5);
  const auto set = DissimilaritySetX(csf, 1.0, 0.1, 4.0);
  ASSERT_TRUE(set.lower && set.upper);
  EXPECT_FALSE(set.singleton);
  EXPECT_NEAR(1.0 - set.lower->lo, std::log(9.0) / 10, 1e-14);
  EXPECT_NEAR(set.upper->hi - 1.0, std::log(9.0) / 10, 1e-14);
  EXPECT_NEAR(std::log(9.0) / 10, 0.2197, 1e-4);
  EXPECT_FALSE(set.Contains(1.0));
  ExpectSetMatchesScan(csf, 1.0, 0.1, 4.0, true);
}

TEST(DissimilaritySetTest, BlottoIsEmpty) {
  const auto csf = ContestSuccessFunction::Blotto(0.5);
  for (double y : {0.0, 0.3, 2.0}) {
    EXPECT_TRUE(DissimilaritySetX(csf, y, 0.1, 2.0).Empty());
    EXPECT_TRUE(DissimilaritySetY(csf, y, 0.1, 2.0).Empty());
  }
}

TEST(DissimilaritySetTest, MatchesDenseScan) {
  RandomStream rng(6);
  for (int t = 0; t < 40; ++t) {
    const double alpha = rng.Uniform(0.2, 0.8);
    const double eps = rng.Uniform(0.01, 0.95) * std::min(alpha, 1 - alpha);
    const double r = std::exp(rng.Uniform(std::log(0.5), std::log(200.0)));
    const double bound = rng.Uniform(1, 5);
    const double fixed = rng.NextUniform() < 0.1 ? 0.0 : rng.Uniform(0, bound);
    for (const auto& csf : {ContestSuccessFunction::Power(r, alpha), ContestSuccessFunction::Logit(r, alpha)}) {
      ExpectSetMatchesScan(csf, fixed, eps, bound, true);
      ExpectSetMatchesScan(csf, fixed, eps, bound, false);
    }
  }
}

TEST(DissimilaritySetTest, CustomSearchMatchesPowerForm) {
  const double alpha = 0.45, r = 4.0, eps = 0.08, bound = 3.0;
  const auto power = ContestSuccessFunction::Power(r, alpha);
  const auto custom = ContestSuccessFunction::Custom(
      [power](double x, double y) { return power.ShareA(x, y); }, alpha, true);
  for (double fixed : {0.2, 1.0, 2.9}) {
    for (bool x_side : {true, false}) {
      const auto a = x_side ? DissimilaritySetX(power, fixed, eps, bound)
                            : DissimilaritySetY(power, fixed, eps, bound);
      const auto b = x_side ? DissimilaritySetX(custom, fixed, eps, bound)
                            : DissimilaritySetY(custom, fixed, eps, bound);
      ASSERT_EQ(a.lower.has_value(), b.lower.has_value());
      ASSERT_EQ(a.upper.has_value(), b.upper.has_value());
      EXPECT_FALSE(b.singleton);
      if (a.lower) EXPECT_NEAR(a.lower->lo, b.lower->lo, 1e-9);
      if (a.upper) EXPECT_NEAR(a.upper->hi, b.upper->hi, 1e-9);
    }
  }
  // A rule that does not pay alpha on ties yields the singleton.
  const auto skewed = ContestSuccessFunction::Custom(
      [](double x, double y) { return x >= y ? 1.0 : 0.0; }, 0.5, false);
  const auto s = DissimilaritySetX(skewed, 1.0, 0.1, 2.0);
  ASSERT_TRUE(s.singleton);
  EXPECT_EQ(*s.singleton, 1.0);
}

TEST(DissimilaritySetTest, RejectsEpsilonOutOfRange) {
  const auto csf = ContestSuccessFunction::Power(2, 0.3);
  EXPECT_THROW(DissimilaritySetX(csf, 1.0, 0.3, 2.0), Error);
  EXPECT_THROW(DissimilaritySetX(csf, 1.0, 0.0, 2.0), Error);
  EXPECT_THROW(DissimilaritySetX(csf, 3.0, 0.1, 2.0), Error);
}

TEST(DeltaBoundTest, BlottoIsZero) {
  const auto g = ValidatedGame::Validate(UniformGame(5, 1, 2));
  const auto d = ComputeDeltaBound(g, SolveGamma(g).front(), ContestSuccessFunction::Blotto(0.5), 0.1);
  EXPECT_EQ(d.delta, 0.0);
  EXPECT_FALSE(d.closed_form);
}

TEST(DeltaBoundTest, FlagsGridSupremumForNonLipschitzCustom) {
  const auto g = ValidatedGame::Validate(UniformGame(4, 1, 1.5));
  const auto sol = SolveGamma(g).front();
  auto tullock = [](double x, double y) { return x + y == 0.0 ? 0.5 : x / (x + y); };
  EXPECT_TRUE(ComputeDeltaBound(g, sol, ContestSuccessFunction::Custom(tullock, 0.5, false), 0.1).grid_supremum);
  EXPECT_FALSE(ComputeDeltaBound(g, sol, ContestSuccessFunction::Custom(tullock, 0.5, true), 0.1).grid_supremum);
  EXPECT_FALSE(ComputeDeltaBound(g, sol, ContestSuccessFunction::Power(1, 0.5), 0.1).grid_supremum);
}

// The top grid point must not round past 2 X_B for awkward budgets.
TEST(DeltaBoundTest, AcceptsAnyBudget) {
  RandomStream rng(12);
  for (int t = 0; t < 300; ++t) {
    const double xa = rng.Uniform(0.1, 10);
    const auto g = ValidatedGame::Validate(UniformGame(3, xa, xa * rng.Uniform(1, 5)));
    EXPECT_NO_THROW(ComputeDeltaBound(g, SolveGamma(g).front(), ContestSuccessFunction::Logit(10, 0.5), 0.1));
  }
}

TEST(DeltaBoundTest, PowerNonIncreasingInR) {
  GameSpec s = UniformGame(6, 1, 1.5);
  s.values_a = {1, 2, 3, 1, 2, 3};
  const auto g = ValidatedGame::Validate(s);
  const auto sol = SolveGamma(g).front();
  double prev = 2.0;
  for (double r : {10.0, 100.0, 1000.0, 10000.0}) {
    const auto d = ComputeDeltaBound(g, sol, ContestSuccessFunction::Power(r, 0.5), 0.05);
    EXPECT_LE(d.delta, prev);
    prev = d.delta;
  }
  EXPECT_LT(prev, 0.01);
}

TEST(DeltaBoundTest, NumericMaxBelowPowerClosedForm) {
  RandomStream rng(8);
  for (int t = 0; t < 100; ++t) {
    const auto g = ValidatedGame::Validate(RandomGame(rng, 3, 15, 4, 3));
    const auto sol = SolveGamma(g).front();
    const double alpha = rng.Uniform(0.2, 0.8);
    const double eps = rng.Uniform(0.05, 0.9) * std::min(alpha, 1 - alpha);
    const double r = std::exp(rng.Uniform(std::log(1.0), std::log(1e5)));
    const auto d = ComputeDeltaBound(g, sol, ContestSuccessFunction::Power(r, alpha), eps);
    ASSERT_TRUE(d.closed_form);
    ASSERT_LE(d.delta, *d.closed_form) << "R=" << r;
    ASSERT_GE(d.delta, 0.0);
    ASSERT_LE(d.delta, 1.0);
  }
}

// Near-homogeneous values keep the closed form below its cap.
TEST(DeltaBoundTest, UncappedPowerClosedFormDominates) {
  RandomStream rng(11);
  int uncapped = 0;
  for (int t = 0; t < 50; ++t) {
    const auto g = ValidatedGame::Validate(RandomGame(rng, 3, 10, 1.1, 1.5));
    const auto sol = SolveGamma(g).front();
    const double r = std::exp(rng.Uniform(std::log(1e4), std::log(1e6)));
    const auto d = ComputeDeltaBound(g, sol, ContestSuccessFunction::Power(r, 0.5), 0.1);
    ASSERT_LE(d.delta, *d.closed_form) << "R=" << r;
    uncapped += *d.closed_form < 1.0;
  }
  EXPECT_GT(uncapped, 25);
}

TEST(DeltaBoundTest, DenseRescanNeverExceedsDelta) {
  RandomStream rng(10);
  for (int t = 0; t < 6; ++t) {
    const auto g = ValidatedGame::Validate(RandomGame(rng, 3, 6, 4, 3));
    const auto sol = SolveGamma(g).front();
    const auto m = UniformTypeMarginals(g, sol);
    const double bound = 2 * g.budget_b();
    for (const auto& csf : {ContestSuccessFunction::Power(30, 0.4), ContestSuccessFunction::Logit(30, 0.4)}) {
      const auto d = ComputeDeltaBound(g, sol, csf, 0.1);
      for (std::size_t i = 0; i < g.n(); ++i) {
        for (int k = 0; k <= 100000; k += 7) {
          const double fixed = bound * k / 100000.0;
          ASSERT_LE(SetMass(m.a[i], DissimilaritySetX(csf, fixed, 0.1, bound)), d.delta);
          ASSERT_LE(SetMass(m.b[i], DissimilaritySetY(csf, fixed, 0.1, bound)), d.delta);
        }
      }
      // Integrate the defining set at the maximizer by brute force.
      const auto& dist = (d.argmax_side == Player::kA ? m.a : m.b)[d.argmax_battlefield];
      const int cells = 100000;
      double mass = 0.0;
      for (int k = 0; k < cells; ++k) {
        const double t = bound * (k + 0.5) / cells;
        const double x = d.argmax_side == Player::kA ? t : d.argmax_point;
        const double y = d.argmax_side == Player::kA ? d.argmax_point : t;
        if (std::fabs(csf.ShareA(x, y) - csf.Blotto(x, y).first) >= 0.1) {
          mass += dist.Cdf(bound * (k + 1.0) / cells) - dist.Cdf(bound * k / static_cast<double>(cells));
        }
      }
      const double x0 = d.argmax_side == Player::kA ? 0.0 : d.argmax_point;
      const double y0 = d.argmax_side == Player::kA ? d.argmax_point : 0.0;
      if (std::fabs(csf.ShareA(x0, y0) - csf.Blotto(x0, y0).first) >= 0.1) mass += dist.mass_at_zero();
      EXPECT_NEAR(mass, d.raw_max, 4.0 / cells * bound / dist.upper() + 1e-9);
    }
  }
}

TEST(DeltaBoundTest, LogitClosedFormMissesTheAtomAtZero) {
  // The weak player's atom at 0 lies inside X(y*) for small y* > 0, so the
  // exact maximum is at least that atom for every R, while the interval
  // width bound keeps shrinking with R.
  const auto g = ValidatedGame::Validate(UniformGame(20, 1, 2));
  const auto sol = SolveGamma(g).front();
  const auto d = ComputeDeltaBound(g, sol, ContestSuccessFunction::Logit(1000, 0.5), 0.1);
  ASSERT_TRUE(d.closed_form);
  EXPECT_GE(d.delta, 0.5);
  EXPECT_LT(*d.closed_form, 0.1);
}

TEST(DeltaBoundTest, RejectsEpsilonOutOfRange) {
  const auto g = ValidatedGame::Validate(UniformGame(5, 1, 2));
  const auto sol = SolveGamma(g).front();
  EXPECT_THROW(ComputeDeltaBound(g, sol, ContestSuccessFunction::Logit(10, 0.2), 0.25), Error);
}

}  // namespace
}  // namespace blotto
