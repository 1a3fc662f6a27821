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

#ifndef BLOTTO_TESTS_TEST_UTIL_H_
#define BLOTTO_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "blotto/game.h"
#include "blotto/gamma_solver.h"
#include "blotto/random_stream.h"

namespace blotto::testing {

// Random game with n in [n_lo, n_hi], values in [1, w_ratio], X_A = 1 and
// X_B in [1, budget_ratio].
inline GameSpec RandomGame(RandomStream& rng, std::size_t n_lo, std::size_t n_hi, double w_ratio,
                           double budget_ratio) {
  GameSpec g;
  g.n = static_cast<std::size_t>(rng.UniformInt(static_cast<int64_t>(n_lo), static_cast<int64_t>(n_hi)));
  g.budget_a = 1.0;
  g.budget_b = rng.Uniform(1.0, budget_ratio);
  for (std::size_t i = 0; i < g.n; ++i) {
    g.values_a.push_back(rng.Uniform(1.0, w_ratio));
    g.values_b.push_back(rng.Uniform(1.0, w_ratio));
  }
  g.alpha = rng.NextUniform();
  return g;
}

inline GameSpec ConstantSumGame(RandomStream& rng, std::size_t n_lo, std::size_t n_hi,
                                double w_ratio, double budget_ratio) {
  GameSpec g = RandomGame(rng, n_lo, n_hi, w_ratio, budget_ratio);
  g.values_b = g.values_a;
  return g;
}

inline GameSpec UniformGame(std::size_t n, double budget_a, double budget_b, double alpha = 0.5) {
  GameSpec g;
  g.n = n;
  g.budget_a = budget_a;
  g.budget_b = budget_b;
  g.values_a.assign(n, 1.0);
  g.values_b.assign(n, 1.0);
  g.alpha = alpha;
  return g;
}

// Independent root oracle. Evaluates
//   rho * g - (g^2 S1 + S2) / (S3 + S4 / g^2)
// with the partition sums recomputed from their definition for every
// interval between sorted ratios, scans [lo, hi] with relative step
// `rel_step`, and bisects every sign change to machine resolution.
class BisectionOracle {
 public:
  explicit BisectionOracle(const ValidatedGame& game) : game_(game) {
    const std::size_t n = game.n();
    for (std::size_t i = 0; i < n; ++i) ratios_.push_back(game.norm_a()[i] / game.norm_b()[i]);
    std::sort(ratios_.begin(), ratios_.end());
    ratios_.erase(std::unique(ratios_.begin(), ratios_.end()), ratios_.end());
  }

  double F(double g) const {
    double s1 = 0, s2 = 0, s3 = 0, s4 = 0;
    const auto va = game_.norm_a();
    const auto vb = game_.norm_b();
    for (std::size_t i = 0; i < game_.n(); ++i) {
      if (va[i] / vb[i] > g) {
        s1 += vb[i] * vb[i] / va[i];
        s3 += vb[i];
      } else {
        s2 += va[i];
        s4 += va[i] * va[i] / vb[i];
      }
    }
    const double rho = game_.budget_b() / game_.budget_a();
    return rho * g - (g * g * s1 + s2) / (s3 + s4 / (g * g));
  }

  std::vector<double> Roots(double lo, double hi, double rel_step) const {
    std::vector<double> roots;
    double a = lo;
    double fa = F(a);
    while (a < hi) {
      const double b = std::min(hi, a * (1.0 + rel_step));
      const double fb = F(b);
      if (fa == 0.0) {
        if (roots.empty() || roots.back() != a) roots.push_back(a);
      } else if ((fa < 0) != (fb < 0) && fb != 0.0) {
        roots.push_back(Bisect(a, b, fa));
      }
      a = b;
      fa = fb;
    }
    if (fa == 0.0 && (roots.empty() || roots.back() != a)) roots.push_back(a);
    return roots;
  }

 private:
  double Bisect(double a, double b, double fa) const {
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      const double fm = F(mid);
      if (fm == 0.0) return mid;
      if ((fm < 0) == (fa < 0)) {
        a = mid;
        fa = fm;
      } else {
        b = mid;
      }
      if (b - a <= 1e-12 * b) break;
    }
    return 0.5 * (a + b);
  }

  const ValidatedGame& game_;
  std::vector<double> ratios_;
};

struct Exhaustive {
  double value = -1.0;
  std::vector<std::size_t> units;
};

// Enumerates every grid allocation in lexicographic order, summing
// w_0 g_0 + (w_1 g_1 + (... + 0)) and keeping the first strict maximum.
inline Exhaustive ExhaustiveSearch(const std::vector<double>& w,
                            const std::vector<std::vector<double>>& win) {
  const std::size_t n = w.size();
  const std::size_t K = win[0].size() - 1;
  Exhaustive best;
  std::vector<std::size_t> k(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i == n) {
      double v = 0.0;
      for (std::size_t j = n; j-- > 0;) v = w[j] * win[j][k[j]] + v;
      if (v > best.value) {
        best.value = v;
        best.units = k;
      }
      return;
    }
    for (std::size_t u = 0; u <= left; ++u) {
      k[i] = u;
      rec(i + 1, left - u);
    }
    k[i] = 0;
  };
  rec(0, K);
  return best;
}

inline bool RelClose(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max(std::fabs(a), std::fabs(b));
}

}  // namespace blotto::testing

#endif  // BLOTTO_TESTS_TEST_UTIL_H_
