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

#ifndef BLOTTO_GAMMA_SOLVER_H_
#define BLOTTO_GAMMA_SOLVER_H_

#include <array>
#include <cstddef>
#include <vector>

#include "blotto/game.h"

namespace blotto {

// One positive root gamma* of the equilibrium-ratio equation
//
//   (X_B / X_A) * gamma = (gamma^2 * S1 + S2) / (S3 + S4 / gamma^2),
//
// where, with Omega = {i : v^A_i / v^B_i > gamma},
//   S1 = sum_{i in Omega} (v^B_i)^2 / v^A_i,   S2 = sum_{i not in Omega} v^A_i,
//   S3 = sum_{i in Omega} v^B_i,              S4 = sum_{i not in Omega} (v^A_i)^2 / v^B_i,
// together with the budget multipliers lambda_A, lambda_B derived from it.
struct GammaSolution {
  double gamma = 0.0;
  double lambda_a = 0.0;
  double lambda_b = 0.0;
  std::vector<std::size_t> omega_a;  // ascending battlefield indices
  double residual = 0.0;

  bool InOmega(std::size_t i) const;
};

struct ParameterBounds {
  double gamma_low = 0.0;
  double gamma_high = 0.0;
  double lambda_low = 0.0;
  double lambda_high = 0.0;
};

// Maximum accepted residual (see EquationResidual).
inline constexpr double kResidualTolerance = 1e-8;

// Coefficients {c3, c2, c1, c0} of the cubic
//   S1 g^3 - rho S3 g^2 + S2 g - rho S4 = 0,   rho = X_B / X_A,
// which is the equation multiplied through by gamma * (S3 gamma^2 + S4) / gamma^2.
// Omega is evaluated at `gamma`.
std::array<double, 4> CubicCoefficients(const ValidatedGame& game, double gamma);

// |cubic(gamma)| divided by the sum of the magnitudes of its four terms, so
// that the residual is scale-free. Omega is evaluated at gamma itself.
double EquationResidual(const ValidatedGame& game, double gamma);

// All distinct positive roots, ascending. Never empty for a validated game;
// throws Error(kNumerical) otherwise.
std::vector<GammaSolution> SolveGamma(const ValidatedGame& game);

// Multipliers and Omega for a verified root; throws Error(kNumerical) if the
// residual at `gamma` exceeds kResidualTolerance.
GammaSolution LagrangeMultipliers(const ValidatedGame& game, double gamma);

// Box that contains every root and multiplier of any game whose values lie
// in `bounds` and whose budgets are (budget_a, budget_b).
ParameterBounds ComputeParameterBounds(ValueBounds bounds, double budget_a, double budget_b);

// Real roots of c3 x^3 + c2 x^2 + c1 x + c0 (degenerate leading coefficients
// fall back to quadratic / linear), ascending, with multiplicity collapsed.
std::vector<double> RealCubicRoots(double c3, double c2, double c1, double c0);

}  // namespace blotto

#endif  // BLOTTO_GAMMA_SOLVER_H_
