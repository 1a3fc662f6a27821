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

#ifndef BLOTTO_DISTRIBUTIONS_H_
#define BLOTTO_DISTRIBUTIONS_H_

#include <cstddef>
#include <vector>

#include "blotto/game.h"
#include "blotto/gamma_solver.h"
#include "blotto/random_stream.h"

namespace blotto {

enum class DistributionRole { kStrongA, kWeakA, kStrongB, kWeakB };

const char* RoleName(DistributionRole role);

// Interval of the real line with explicit endpoint closure.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = true;
  bool hi_closed = true;

  bool Contains(double x) const {
    return (lo_closed ? x >= lo : x > lo) && (hi_closed ? x <= hi : x < hi);
  }
  bool Empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }
};

// Point mass p0 at zero plus the remaining mass spread uniformly on (0, b]:
//   F(x) = p0 + (1 - p0) * x / b  for 0 <= x <= b,   F(x) = 1 for x >= b.
// Strong roles have p0 = 0.
class UniformTypeDistribution {
 public:
  UniformTypeDistribution(double mass_at_zero, double upper, DistributionRole role);

  double mass_at_zero() const { return mass_at_zero_; }
  double upper() const { return upper_; }
  DistributionRole role() const { return role_; }

  // P(X <= x); right-continuous, 0 for x < 0.
  double Cdf(double x) const;
  // P(X < x).
  double CdfBelow(double x) const;
  // P(X = x); non-zero only at the atom x = 0.
  double ProbEqual(double x) const { return x == 0.0 ? mass_at_zero_ : 0.0; }
  // P(X in interval).
  double Mass(const Interval& interval) const;
  // Inverse CDF: 0 if u < p0, else b * (u - p0) / (1 - p0).
  double Quantile(double u) const;
  double Sample(RandomStream& rng) const { return Quantile(rng.NextUniform()); }
  // (1 - p0) * b / 2.
  double Mean() const { return 0.5 * (1.0 - mass_at_zero_) * upper_; }
  // Uniform density on (0, b].
  double Density() const { return (1.0 - mass_at_zero_) / upper_; }

 private:
  double mass_at_zero_;
  double upper_;
  DistributionRole role_;
};

// Per-battlefield equilibrium marginals of both players for one root.
struct MarginalSet {
  std::vector<UniformTypeDistribution> a;
  std::vector<UniformTypeDistribution> b;
  GammaSolution solution;

  std::size_t n() const { return a.size(); }
  const std::vector<UniformTypeDistribution>& of(Player p) const {
    return p == Player::kA ? a : b;
  }
};

// For i in Omega_A: support b = v^B_i / lambda_B, A strong, B weak with
// p0 = 1 - b / (v^A_i / lambda_A). Otherwise b = v^A_i / lambda_A, B strong,
// A weak with p0 = 1 - b / (v^B_i / lambda_B).
MarginalSet UniformTypeMarginals(const ValidatedGame& game, const GammaSolution& solution);

// Probability that every independent draw of `player` is zero.
double ProbAllZero(const MarginalSet& marginals, Player player);

}  // namespace blotto

#endif  // BLOTTO_DISTRIBUTIONS_H_
