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

#ifndef BLOTTO_CSF_ANALYSIS_H_
#define BLOTTO_CSF_ANALYSIS_H_

#include <cstddef>
#include <optional>

#include "blotto/csf.h"
#include "blotto/distributions.h"
#include "blotto/game.h"
#include "blotto/gamma_solver.h"

namespace blotto {

// Points where a CSF differs from the winner-takes-all rule by at least eps,
// for one fixed opponent bid. Built-in kinds never produce the singleton.
struct DissimilaritySet {
  std::optional<double> singleton;
  std::optional<Interval> lower;  // strictly below the fixed bid
  std::optional<Interval> upper;  // strictly above the fixed bid

  bool Empty() const { return !singleton && !lower && !upper; }
  bool Contains(double x) const;
};

// Throws Error(kInvalidArgument) unless 0 < eps < min(alpha, 1 - alpha)
// (for the Blotto kind only eps > 0 is required).
void CheckEpsilon(const ContestSuccessFunction& csf, double eps);

// {x in [0, bound] : |zeta_A(x, y_star) - beta_A(x, y_star)| >= eps}.
DissimilaritySet DissimilaritySetX(const ContestSuccessFunction& csf, double y_star, double eps,
                                   double bound);
// {y in [0, bound] : |zeta_B(x_star, y) - beta_B(x_star, y)| >= eps}.
DissimilaritySet DissimilaritySetY(const ContestSuccessFunction& csf, double x_star, double eps,
                                   double bound);

// Probability that `dist` falls in `set`.
double SetMass(const UniformTypeDistribution& dist, const DissimilaritySet& set);

enum class DeltaMethod { kNumericMax, kClosedFormPower, kClosedFormLogit };

const char* DeltaMethodName(DeltaMethod method);

struct DeltaBound {
  double delta = 0.0;
  double epsilon = 0.0;
  DeltaMethod method = DeltaMethod::kNumericMax;
  // Maximizer of the numeric search (internal labels).
  double argmax_point = 0.0;
  std::size_t argmax_battlefield = 0;
  Player argmax_side = Player::kA;
  // Unsafened maximum found by the search.
  double raw_max = 0.0;
  // Interval-width bound, present for Power and Logit.
  std::optional<double> closed_form;
  std::optional<DeltaMethod> closed_form_method;
  // Set for custom rules not declared Lipschitz: the maximum may only be
  // approached in a limit, so `delta` is the grid supremum.
  bool grid_supremum = false;
};

// min{1, 2 n lambda_high width w_high / w_low}, where `width` bounds the
// distance from the fixed bid to any point of either dissimilarity set.
// Only defined for Power and Logit.
double ClosedFormDelta(const ValidatedGame& game, const ContestSuccessFunction& csf, double eps);

// Largest mass any X-set (under F_{A*_i}) or Y-set (under F_{B*_i}) carries,
// maximized over the fixed bid in [0, 2 X_B] on a 1000-point grid plus every
// point where the mass can change slope or jump. The result is inflated by
// 1e-6 relative and capped at 1. Exactly 0 for the Blotto kind.
DeltaBound ComputeDeltaBound(const ValidatedGame& game, const GammaSolution& solution,
                             const ContestSuccessFunction& csf, double eps);

}  // namespace blotto

#endif  // BLOTTO_CSF_ANALYSIS_H_
