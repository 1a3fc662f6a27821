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

#ifndef BLOTTO_IU_STRATEGY_H_
#define BLOTTO_IU_STRATEGY_H_

#include <cstddef>
#include <vector>

#include "blotto/distributions.h"
#include "blotto/game.h"
#include "blotto/gamma_solver.h"
#include "blotto/random_stream.h"

namespace blotto {

// The independently-uniform mixed strategy of both players for one root:
// draw every battlefield independently from its uniform-type marginal, then
// rescale so the draw spends exactly the budget (all zeros if the draw is
// identically zero).
class IUSampler {
 public:
  IUSampler(ValidatedGame game, GammaSolution solution);

  const ValidatedGame& game() const { return game_; }
  const GammaSolution& solution() const { return marginals_.solution; }
  const MarginalSet& marginals() const { return marginals_; }

  // One pure strategy for `player` (internal labels).
  Allocation Sample(Player player, RandomStream& rng) const;
  // Same, writing into `out` (size n) to avoid allocation in hot loops.
  void SampleInto(Player player, RandomStream& rng, std::span<double> out) const;

 private:
  ValidatedGame game_;
  MarginalSet marginals_;
};

// Per-battlefield sorted samples of one player's allocations.
class EmpiricalMarginals {
 public:
  EmpiricalMarginals() = default;
  // Sorts each column.
  explicit EmpiricalMarginals(std::vector<std::vector<double>> columns);

  std::size_t n() const { return columns_.size(); }
  std::size_t m() const { return columns_.empty() ? 0 : columns_.front().size(); }
  const std::vector<double>& sorted(std::size_t i) const { return columns_[i]; }

  // Fractions of samples on battlefield i that are < x, == x, <= x.
  double FractionBelow(std::size_t i, double x) const;
  double FractionEqual(std::size_t i, double x) const;
  double Cdf(std::size_t i, double x) const;

 private:
  std::vector<std::vector<double>> columns_;
};

struct SampleBatch {
  EmpiricalMarginals marginals;
  std::vector<Allocation> draws;  // empty unless requested
};

// Draw j uses root.Split(j), so the output depends only on (root, m), not on
// `threads`. Throws Error(kInvalidArgument) when m == 0.
SampleBatch DrawBatch(const IUSampler& sampler, Player player, std::size_t m,
                      const RandomStream& root, int threads = 1, bool keep_draws = true);

// Exact sup-norm distance between the empirical CDF of a sorted sample and a
// uniform-type CDF.
double KolmogorovDistance(const std::vector<double>& sorted, const UniformTypeDistribution& dist);

// KolmogorovDistance per battlefield for `player`. Throws on a battlefield
// count mismatch.
std::vector<double> MarginalGap(const EmpiricalMarginals& empirical, const MarginalSet& analytic,
                                Player player);

}  // namespace blotto

#endif  // BLOTTO_IU_STRATEGY_H_
