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

#ifndef BLOTTO_BEST_RESPONSE_H_
#define BLOTTO_BEST_RESPONSE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "blotto/csf.h"
#include "blotto/distributions.h"
#include "blotto/game.h"
#include "blotto/gamma_solver.h"
#include "blotto/iu_strategy.h"

namespace blotto {

struct BestResponseResult {
  Allocation allocation;
  double value = 0.0;      // expected payoff of the responder
  double grid_step = 0.0;  // 0 for analytic values
};

// What a responder needs to know about the opponent on each battlefield:
// the probability that the opponent bids strictly less than x, and exactly x.
class OpponentMarginals {
 public:
  virtual ~OpponentMarginals() = default;
  virtual std::size_t n() const = 0;
  virtual double Below(std::size_t i, double x) const = 0;
  virtual double Equal(std::size_t i, double x) const = 0;
};

class EmpiricalOpponent : public OpponentMarginals {
 public:
  explicit EmpiricalOpponent(const EmpiricalMarginals& samples) : samples_(samples) {}
  std::size_t n() const override { return samples_.n(); }
  double Below(std::size_t i, double x) const override { return samples_.FractionBelow(i, x); }
  double Equal(std::size_t i, double x) const override { return samples_.FractionEqual(i, x); }

 private:
  const EmpiricalMarginals& samples_;
};

class AnalyticOpponent : public OpponentMarginals {
 public:
  explicit AnalyticOpponent(std::vector<UniformTypeDistribution> dists) : dists_(std::move(dists)) {}
  std::size_t n() const override { return dists_.size(); }
  double Below(std::size_t i, double x) const override { return dists_[i].CdfBelow(x); }
  double Equal(std::size_t i, double x) const override { return dists_[i].ProbEqual(x); }

 private:
  std::vector<UniformTypeDistribution> dists_;
};

// An opponent who plays one pure strategy with certainty.
class PureOpponent : public OpponentMarginals {
 public:
  explicit PureOpponent(Allocation x) : x_(std::move(x)) {}
  std::size_t n() const override { return x_.size(); }
  double Below(std::size_t i, double x) const override { return x_[i] < x ? 1.0 : 0.0; }
  double Equal(std::size_t i, double x) const override { return x_[i] == x ? 1.0 : 0.0; }

 private:
  Allocation x_;
};

// Maximizes sum_i values[i] * win[i][k_i] subject to sum_i k_i <= K, where
// win[i] has K + 1 entries and unit k is worth budget * k / K. The value is
// accumulated right to left, w_0 g_0 + (w_1 g_1 + (... + 0)), and among
// optimal allocations the lexicographically smallest is returned.
BestResponseResult BestResponseOnGrid(std::span<const double> values,
                                      const std::vector<std::vector<double>>& win, double budget);

// Grid best response against `opponent`, where a grid bid x wins
// P(opp < x) + tie_share * P(opp == x) of battlefield i.
// Throws Error(kInvalidArgument) if grid_points < 2 or sizes disagree, and
// Error(kNumerical) if a marginal evaluates outside [0, 1].
BestResponseResult DiscretizedBestResponse(std::span<const double> values,
                                           const OpponentMarginals& opponent, double budget,
                                           std::size_t grid_points, double tie_share);

// Exact best-response value of `player` against the opponent's uniform-type
// marginals (internal labels).
double AnalyticBestResponseValue(const ValidatedGame& game, const GammaSolution& solution,
                                 Player player);

struct ExploitabilityOptions {
  std::size_t m_samples = 100000;
  std::size_t grid_points = 201;
  uint64_t seed = 0;
  int threads = 1;
};

struct ExploitabilityReport {
  Player player = Player::kA;  // internal label
  double iu_value = 0.0;
  double br_value = 0.0;
  double epsilon_hat = 0.0;   // (br_value - iu_value) / W_P
  double ci_halfwidth = 0.0;  // 95% half-width on iu_value
  std::size_t m_samples = 0;
  std::size_t grid_points = 0;
  uint64_t seed = 0;
};

// Monte Carlo exploitability of the IU profile under `rule`, reports for
// {A, B} in internal labels. The IU value pairs m independent draws of each
// player; the best response faces empirical marginals of m fresh opponent
// draws. Stream layout under RandomStream(seed): Split(1)/Split(2) are the
// paired draws of A/B, Split(3) the B draws faced by A's best response,
// Split(4) the A draws faced by B's.
std::array<ExploitabilityReport, 2> EstimateExploitability(const ValidatedGame& game,
                                                           const GammaSolution& solution,
                                                           const ContestSuccessFunction& rule,
                                                           const ExploitabilityOptions& options);

}  // namespace blotto

#endif  // BLOTTO_BEST_RESPONSE_H_
