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

#include <algorithm>
#include <cmath>

#include "blotto/error.h"

namespace blotto {

const char* RoleName(DistributionRole role) {
  switch (role) {
    case DistributionRole::kStrongA: return "strong_a";
    case DistributionRole::kWeakA: return "weak_a";
    case DistributionRole::kStrongB: return "strong_b";
    case DistributionRole::kWeakB: return "weak_b";
  }
  return "unknown";
}

UniformTypeDistribution::UniformTypeDistribution(double mass_at_zero, double upper,
                                                 DistributionRole role)
    : mass_at_zero_(mass_at_zero), upper_(upper), role_(role) {
  if (!(mass_at_zero >= 0.0 && mass_at_zero <= 1.0)) ThrowInvalid("mass at zero must lie in [0, 1]");
  if (!(upper > 0.0) || !std::isfinite(upper)) ThrowInvalid("support end must be positive");
}

double UniformTypeDistribution::Cdf(double x) const {
  if (x < 0.0) return 0.0;
  if (x >= upper_) return 1.0;
  return mass_at_zero_ + (1.0 - mass_at_zero_) * x / upper_;
}

double UniformTypeDistribution::CdfBelow(double x) const {
  if (x <= 0.0) return 0.0;
  if (x > upper_) return 1.0;
  return mass_at_zero_ + (1.0 - mass_at_zero_) * x / upper_;
}

double UniformTypeDistribution::Mass(const Interval& interval) const {
  if (interval.Empty()) return 0.0;
  double mass = interval.Contains(0.0) ? mass_at_zero_ : 0.0;
  const double len = std::min(interval.hi, upper_) - std::max(interval.lo, 0.0);
  if (len > 0.0) mass += (1.0 - mass_at_zero_) * len / upper_;
  return std::min(mass, 1.0);
}

double UniformTypeDistribution::Quantile(double u) const {
  if (u < mass_at_zero_ || mass_at_zero_ >= 1.0) return 0.0;
  return upper_ * (u - mass_at_zero_) / (1.0 - mass_at_zero_);
}

MarginalSet UniformTypeMarginals(const ValidatedGame& game, const GammaSolution& solution) {
  MarginalSet m;
  m.solution = solution;
  const auto va = game.norm_a();
  const auto vb = game.norm_b();
  for (std::size_t i = 0; i < game.n(); ++i) {
    // Incentives v^A_i / lambda_A and v^B_i / lambda_B.
    const double ka = va[i] / solution.lambda_a;
    const double kb = vb[i] / solution.lambda_b;
    if (solution.InOmega(i)) {
      const double p0 = std::max(0.0, (ka - kb) / ka);
      m.a.emplace_back(0.0, kb, DistributionRole::kStrongA);
      m.b.emplace_back(p0, kb, DistributionRole::kWeakB);
    } else {
      const double p0 = std::max(0.0, (kb - ka) / kb);
      m.a.emplace_back(p0, ka, DistributionRole::kWeakA);
      m.b.emplace_back(0.0, ka, DistributionRole::kStrongB);
    }
  }
  return m;
}

double ProbAllZero(const MarginalSet& marginals, Player player) {
  double p = 1.0;
  for (const auto& d : marginals.of(player)) p *= d.mass_at_zero();
  return p;
}

}  // namespace blotto
