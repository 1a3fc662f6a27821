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

#include "blotto/game.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "blotto/error.h"
#include "shares.h"

namespace blotto {

double Allocation::Total() const {
  double s = 0.0;
  for (double v : amounts_) s += v;
  return s;
}

namespace {

void CheckValues(const std::vector<double>& w, const char* name) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!std::isfinite(w[i]) || w[i] <= 0.0) {
      std::ostringstream os;
      os << name << "[" << i << "] = " << w[i] << " must be positive and finite";
      ThrowInvalid(os.str());
    }
  }
}

double Sum(const std::vector<double>& w) {
  double s = 0.0;
  for (double v : w) s += v;
  return s;
}

}  // namespace

ValidatedGame ValidatedGame::Validate(const GameSpec& raw) {
  if (raw.values_a.size() != raw.n || raw.values_b.size() != raw.n) {
    std::ostringstream os;
    os << "n = " << raw.n << " but values_a has " << raw.values_a.size() << " and values_b has "
       << raw.values_b.size() << " entries";
    ThrowInvalid(os.str());
  }
  if (raw.n < 2) ThrowInvalid("a game needs at least 2 battlefields");
  if (!std::isfinite(raw.budget_a) || raw.budget_a <= 0.0) {
    ThrowInvalid("budget_a must be positive and finite");
  }
  if (!std::isfinite(raw.budget_b) || raw.budget_b <= 0.0) {
    ThrowInvalid("budget_b must be positive and finite");
  }
  if (!(raw.alpha >= 0.0 && raw.alpha <= 1.0)) ThrowInvalid("alpha must lie in [0, 1]");
  CheckValues(raw.values_a, "values_a");
  CheckValues(raw.values_b, "values_b");

  ValidatedGame g;
  g.relabeled_ = raw.budget_a > raw.budget_b;
  if (g.relabeled_) {
    g.budget_a_ = raw.budget_b;
    g.budget_b_ = raw.budget_a;
    g.values_a_ = raw.values_b;
    g.values_b_ = raw.values_a;
    g.alpha_ = 1.0 - raw.alpha;
  } else {
    g.budget_a_ = raw.budget_a;
    g.budget_b_ = raw.budget_b;
    g.values_a_ = raw.values_a;
    g.values_b_ = raw.values_b;
    g.alpha_ = raw.alpha;
  }
  g.total_a_ = Sum(g.values_a_);
  g.total_b_ = Sum(g.values_b_);
  if (!std::isfinite(g.total_a_) || !std::isfinite(g.total_b_)) {
    ThrowInvalid("total battlefield value overflows");
  }
  for (double w : g.values_a_) g.norm_a_.push_back(w / g.total_a_);
  for (double w : g.values_b_) g.norm_b_.push_back(w / g.total_b_);
  const auto [lo_a, hi_a] = std::minmax_element(g.values_a_.begin(), g.values_a_.end());
  const auto [lo_b, hi_b] = std::minmax_element(g.values_b_.begin(), g.values_b_.end());
  g.bounds_ = {std::min(*lo_a, *lo_b), std::max(*hi_a, *hi_b)};
  if (raw.n < 3) g.warnings_.push_back("fewer than 3 battlefields");
  return g;
}

GameSpec ValidatedGame::InternalSpec() const {
  return GameSpec{n(), budget_a_, budget_b_, values_a_, values_b_, alpha_};
}

void CheckFeasible(const Allocation& x, std::size_t n, double budget, const char* who) {
  if (x.size() != n) {
    std::ostringstream os;
    os << who << " allocation has " << x.size() << " entries, expected " << n;
    ThrowInvalid(os.str());
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(x[i]) || x[i] < 0.0) {
      std::ostringstream os;
      os << who << " allocation entry " << i << " = " << x[i] << " is not a non-negative number";
      ThrowInvalid(os.str());
    }
  }
  const double total = x.Total();
  if (total > budget + kBudgetTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << who << " allocation spends " << total << " > budget " << budget;
    ThrowInvalid(os.str());
  }
}

std::pair<double, double> BlottoPayoff(const ValidatedGame& game, const Allocation& x_a,
                                       const Allocation& x_b) {
  CheckFeasible(x_a, game.n(), game.budget_a(), "A");
  CheckFeasible(x_b, game.n(), game.budget_b(), "B");
  double pa = 0.0, pb = 0.0;
  for (std::size_t i = 0; i < game.n(); ++i) {
    const auto [sa, sb] = internal::BlottoShares(x_a[i], x_b[i], game.alpha());
    pa += game.values_a()[i] * sa;
    pb += game.values_b()[i] * sb;
  }
  return {pa, pb};
}

}  // namespace blotto
