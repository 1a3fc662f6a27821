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

#include "blotto/best_response.h"

#include <cmath>
#include <limits>
#include <sstream>

#include "blotto/error.h"
#include "parallel.h"

namespace blotto {

namespace {

double GridPoint(double budget, std::size_t k, std::size_t units) {
  return budget * static_cast<double>(k) / static_cast<double>(units);
}

double CheckedShare(double g, std::size_t i, double x) {
  if (!std::isfinite(g) || g < -1e-12 || g > 1.0 + 1e-12) {
    std::ostringstream os;
    os << "opponent marginal on battlefield " << i << " evaluated to " << g << " at " << x;
    ThrowNumerical(os.str());
  }
  return g;
}

struct MeanAndHalfWidth {
  double mean = 0.0;
  double half_width = 0.0;
};

MeanAndHalfWidth Summarize(const std::vector<double>& xs) {
  const double m = static_cast<double>(xs.size());
  double sum = 0.0;
  for (double x : xs) sum += x;
  const double mean = sum / m;
  if (xs.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, 1.96 * std::sqrt(ss / (m - 1.0) / m)};
}

}  // namespace

BestResponseResult BestResponseOnGrid(std::span<const double> values,
                                      const std::vector<std::vector<double>>& win, double budget) {
  const std::size_t n = values.size();
  if (win.size() != n || n == 0) ThrowInvalid("win table must have one row per battlefield");
  const std::size_t points = win[0].size();
  if (points < 2) ThrowInvalid("grid needs at least 2 points");
  for (const auto& row : win) {
    if (row.size() != points) ThrowInvalid("win table rows differ in length");
  }
  const std::size_t units = points - 1;

  // best[i][u]: optimum over battlefields i.. using at most u units.
  std::vector<std::vector<double>> best(n + 1, std::vector<double>(units + 1, 0.0));
  for (std::size_t i = n; i-- > 0;) {
    const auto& next = best[i + 1];
    for (std::size_t u = 0; u <= units; ++u) {
      double m = -std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k <= u; ++k) {
        const double v = values[i] * win[i][k] + next[u - k];
        if (v > m) m = v;
      }
      best[i][u] = m;
    }
  }

  // Smallest k reproducing the optimum at each step gives the
  // lexicographically smallest optimal allocation.
  std::vector<double> x(n);
  std::size_t left = units;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k <= left; ++k) {
      if (values[i] * win[i][k] + best[i + 1][left - k] == best[i][left]) {
        x[i] = GridPoint(budget, k, units);
        left -= k;
        break;
      }
    }
  }
  return {Allocation(std::move(x)), best[0][units], budget / static_cast<double>(units)};
}

BestResponseResult DiscretizedBestResponse(std::span<const double> values,
                                           const OpponentMarginals& opponent, double budget,
                                           std::size_t grid_points, double tie_share) {
  if (grid_points < 2) ThrowInvalid("grid_points must be at least 2");
  if (values.size() != opponent.n()) ThrowInvalid("values and opponent marginals differ in size");
  if (!(budget > 0.0) || !std::isfinite(budget)) ThrowInvalid("budget must be positive");
  const std::size_t units = grid_points - 1;
  std::vector<std::vector<double>> win(values.size(), std::vector<double>(grid_points));
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t k = 0; k <= units; ++k) {
      const double x = GridPoint(budget, k, units);
      win[i][k] = CheckedShare(opponent.Below(i, x) + tie_share * opponent.Equal(i, x), i, x);
    }
  }
  return BestResponseOnGrid(values, win, budget);
}

double AnalyticBestResponseValue(const ValidatedGame& game, const GammaSolution& solution,
                                 Player player) {
  if (!(solution.residual <= kResidualTolerance) || !(solution.gamma > 0.0)) {
    ThrowNumerical("solution is not a verified root");
  }
  const double g = solution.gamma;
  const auto va = game.norm_a();
  const auto vb = game.norm_b();
  double s = 0.0;
  for (std::size_t i = 0; i < game.n(); ++i) {
    const bool strong_a = solution.InOmega(i);
    if (player == Player::kA) {
      s += strong_a ? va[i] * (1.0 - g * vb[i] / (2.0 * va[i])) : va[i] * va[i] / (2.0 * g * vb[i]);
    } else {
      s += strong_a ? g * vb[i] * vb[i] / (2.0 * va[i]) : vb[i] * (1.0 - va[i] / (2.0 * g * vb[i]));
    }
  }
  return game.total(player) * s;
}

std::array<ExploitabilityReport, 2> EstimateExploitability(const ValidatedGame& game,
                                                           const GammaSolution& solution,
                                                           const ContestSuccessFunction& rule,
                                                           const ExploitabilityOptions& options) {
  if (options.m_samples == 0) ThrowInvalid("m_samples must be at least 1");
  if (options.grid_points < 2) ThrowInvalid("grid_points must be at least 2");
  const std::size_t m = options.m_samples;
  const std::size_t n = game.n();
  const IUSampler sampler(game, solution);
  const RandomStream root(options.seed);

  // Paired IU play.
  std::vector<double> pay_a(m), pay_b(m);
  const RandomStream stream_a = root.Split(1), stream_b = root.Split(2);
  internal::ParallelFor(m, options.threads, [&](std::size_t begin, std::size_t end) {
    std::vector<double> xa(n), xb(n);
    for (std::size_t j = begin; j < end; ++j) {
      RandomStream ra = stream_a.Split(j), rb = stream_b.Split(j);
      sampler.SampleInto(Player::kA, ra, xa);
      sampler.SampleInto(Player::kB, rb, xb);
      double pa = 0.0, pb = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const auto [sa, sb] = rule.Evaluate(xa[i], xb[i]);
        pa += game.values_a()[i] * sa;
        pb += game.values_b()[i] * sb;
      }
      pay_a[j] = pa;
      pay_b[j] = pb;
    }
  });

  std::array<ExploitabilityReport, 2> reports;
  for (Player p : {Player::kA, Player::kB}) {
    const Player opp = Opponent(p);
    const auto batch = DrawBatch(sampler, opp, m, root.Split(p == Player::kA ? 3 : 4),
                                 options.threads, false);
    BestResponseResult br;
    if (rule.kind() == CsfKind::kBlotto) {
      const double tie = p == Player::kA ? rule.alpha() : 1.0 - rule.alpha();
      br = DiscretizedBestResponse(game.values(p), EmpiricalOpponent(batch.marginals),
                                   game.budget(p), options.grid_points, tie);
    } else {
      const std::size_t units = options.grid_points - 1;
      std::vector<std::vector<double>> win(n, std::vector<double>(options.grid_points));
      internal::ParallelFor(n, options.threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
          const auto& col = batch.marginals.sorted(i);
          for (std::size_t k = 0; k <= units; ++k) {
            const double x = GridPoint(game.budget(p), k, units);
            double sum = 0.0;
            for (double s : col) sum += p == Player::kA ? rule.ShareA(x, s) : rule.ShareB(s, x);
            win[i][k] = CheckedShare(sum / static_cast<double>(m), i, x);
          }
        }
      });
      br = BestResponseOnGrid(game.values(p), win, game.budget(p));
    }
    const auto iu = Summarize(p == Player::kA ? pay_a : pay_b);
    auto& r = reports[p == Player::kA ? 0 : 1];
    r.player = p;
    r.iu_value = iu.mean;
    r.br_value = br.value;
    r.epsilon_hat = (br.value - iu.mean) / game.total(p);
    r.ci_halfwidth = iu.half_width;
    r.m_samples = m;
    r.grid_points = options.grid_points;
    r.seed = options.seed;
  }
  return reports;
}

}  // namespace blotto
