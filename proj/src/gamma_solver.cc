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

#include "blotto/gamma_solver.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "blotto/error.h"

namespace blotto {

namespace {

constexpr double kPi = 3.14159265358979323846;
// Roots this close (relative) to an interval end still count for it.
constexpr double kBoundarySlack = 1e-9;
constexpr double kDedupTolerance = 1e-10;
constexpr int kPolishSteps = 5;

struct Sums {
  double s1 = 0.0, s2 = 0.0, s3 = 0.0, s4 = 0.0;
};

Sums SumsAt(const ValidatedGame& game, double gamma) {
  Sums s;
  const auto va = game.norm_a();
  const auto vb = game.norm_b();
  for (std::size_t i = 0; i < game.n(); ++i) {
    if (va[i] / vb[i] > gamma) {
      s.s1 += vb[i] * vb[i] / va[i];
      s.s3 += vb[i];
    } else {
      s.s2 += va[i];
      s.s4 += va[i] * va[i] / vb[i];
    }
  }
  return s;
}

std::array<double, 4> Coefficients(const Sums& s, double rho) {
  return {s.s1, -rho * s.s3, s.s2, -rho * s.s4};
}

double Cubic(const std::array<double, 4>& c, double x) {
  return ((c[0] * x + c[1]) * x + c[2]) * x + c[3];
}

double CubicSlope(const std::array<double, 4>& c, double x) {
  return (3.0 * c[0] * x + 2.0 * c[1]) * x + c[2];
}

double Polish(const std::array<double, 4>& c, double x, int steps) {
  for (int k = 0; k < steps; ++k) {
    const double f = Cubic(c, x);
    const double d = CubicSlope(c, x);
    if (f == 0.0 || d == 0.0 || !std::isfinite(d)) break;
    const double next = x - f / d;
    if (!std::isfinite(next) || std::fabs(Cubic(c, next)) > std::fabs(f)) break;
    x = next;
  }
  return x;
}

double ScaledResidual(const std::array<double, 4>& c, double x) {
  const double t3 = c[0] * x * x * x, t2 = c[1] * x * x, t1 = c[2] * x, t0 = c[3];
  const double scale = std::fabs(t3) + std::fabs(t2) + std::fabs(t1) + std::fabs(t0);
  if (scale == 0.0) return 0.0;
  return std::fabs(((t3 + t2) + t1) + t0) / scale;
}

std::vector<double> QuadraticRoots(double a, double b, double c) {
  if (a == 0.0) {
    if (b == 0.0) return {};
    return {-c / b};
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) {
    // Keep a numerically tangent root.
    if (-disc <= 1e-14 * (b * b + std::fabs(4.0 * a * c))) return {-b / (2.0 * a)};
    return {};
  }
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  std::vector<double> r;
  if (q != 0.0) {
    r = {q / a, c / q};
  } else {
    r = {0.0};
  }
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace

bool GammaSolution::InOmega(std::size_t i) const {
  return std::binary_search(omega_a.begin(), omega_a.end(), i);
}

std::vector<double> RealCubicRoots(double c3, double c2, double c1, double c0) {
  if (c3 == 0.0) return QuadraticRoots(c2, c1, c0);
  const double a = c2 / c3, b = c1 / c3, c = c0 / c3;
  // x = t - a/3 turns the monic cubic into t^3 + p t + q.
  const double p = b - a * a / 3.0;
  const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  const double half_q = 0.5 * q;
  const double third_p = p / 3.0;
  const double disc = half_q * half_q + third_p * third_p * third_p;
  const double disc_scale = half_q * half_q + std::fabs(third_p * third_p * third_p);
  std::vector<double> ts;
  if (p == 0.0 && q == 0.0) {
    ts = {0.0};
  } else if (disc > 0.0) {
    const double u = std::cbrt(-half_q - std::copysign(std::sqrt(disc), half_q));
    ts.push_back(u == 0.0 ? 0.0 : u - third_p / u);
    if (disc <= 1e-12 * disc_scale) {
      // Nearly a double root; also offer the tangent pair.
      const double v = std::cbrt(-half_q);
      ts.push_back(2.0 * v);
      ts.push_back(-v);
    }
  } else {
    const double r = std::sqrt(-third_p);
    const double arg = std::clamp(-half_q / (r * r * r), -1.0, 1.0);
    const double phi = std::acos(arg);
    for (int k = 0; k < 3; ++k) ts.push_back(2.0 * r * std::cos((phi - 2.0 * kPi * k) / 3.0));
  }
  const std::array<double, 4> coef = {c3, c2, c1, c0};
  std::vector<double> roots;
  for (double t : ts) roots.push_back(Polish(coef, t - a / 3.0, 3));
  std::sort(roots.begin(), roots.end());
  std::vector<double> out;
  for (double x : roots) {
    if (!out.empty() && std::fabs(x - out.back()) <= 1e-14 * std::max(1.0, std::fabs(x))) continue;
    out.push_back(x);
  }
  return out;
}

std::array<double, 4> CubicCoefficients(const ValidatedGame& game, double gamma) {
  return Coefficients(SumsAt(game, gamma), game.budget_b() / game.budget_a());
}

double EquationResidual(const ValidatedGame& game, double gamma) {
  return ScaledResidual(CubicCoefficients(game, gamma), gamma);
}

GammaSolution LagrangeMultipliers(const ValidatedGame& game, double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) ThrowNumerical("gamma must be positive and finite");
  GammaSolution sol;
  sol.gamma = gamma;
  sol.residual = EquationResidual(game, gamma);
  if (!(sol.residual <= kResidualTolerance)) {
    std::ostringstream os;
    os.precision(17);
    os << "gamma = " << gamma << " is not a root (residual " << sol.residual << ")";
    ThrowNumerical(os.str());
  }
  const double xa = game.budget_a(), xb = game.budget_b();
  const auto va = game.norm_a();
  const auto vb = game.norm_b();
  for (std::size_t i = 0; i < game.n(); ++i) {
    if (va[i] / vb[i] > gamma) sol.omega_a.push_back(i);
  }
  if (game.is_constant_sum() && gamma == xb / xa) {
    // Closed form; identical to the general formulas up to round-off.
    sol.lambda_a = 1.0 / (2.0 * xb);
    sol.lambda_b = xa / (2.0 * xb * xb);
    return sol;
  }
  const Sums s = SumsAt(game, gamma);
  sol.lambda_a = (gamma * gamma * s.s1 + s.s2) / (2.0 * xb);
  sol.lambda_b = (s.s3 + s.s4 / (gamma * gamma)) / (2.0 * xa);
  return sol;
}

std::vector<GammaSolution> SolveGamma(const ValidatedGame& game) {
  const double rho = game.budget_b() / game.budget_a();
  if (game.is_constant_sum()) return {LagrangeMultipliers(game, rho)};

  const std::size_t n = game.n();
  const auto va = game.norm_a();
  const auto vb = game.norm_b();
  std::vector<double> ratio(n);
  for (std::size_t i = 0; i < n; ++i) ratio[i] = va[i] / vb[i];
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return ratio[x] < ratio[y]; });

  // Distinct breakpoints r_1 < ... < r_k; interval j is [r_j, r_{j+1}) with
  // r_0 = 0 and r_{k+1} = inf, and Omega on it is every battlefield whose
  // ratio exceeds r_j.
  std::vector<double> breaks;
  for (std::size_t idx : order) {
    if (breaks.empty() || ratio[idx] != breaks.back()) breaks.push_back(ratio[idx]);
  }
  const std::size_t k = breaks.size();

  std::vector<double> candidates;
  for (std::size_t j = 0; j <= k; ++j) {
    const double lo = j == 0 ? 0.0 : breaks[j - 1];
    const double hi = j == k ? std::numeric_limits<double>::infinity() : breaks[j];
    const double probe = j == 0 ? 0.0 : lo;  // Omega = {r_i > probe}
    Sums s;
    for (std::size_t i = 0; i < n; ++i) {
      if (ratio[i] > probe) {
        s.s1 += vb[i] * vb[i] / va[i];
        s.s3 += vb[i];
      } else {
        s.s2 += va[i];
        s.s4 += va[i] * va[i] / vb[i];
      }
    }
    const auto c = Coefficients(s, rho);
    for (double g : RealCubicRoots(c[0], c[1], c[2], c[3])) {
      if (!(g > 0.0) || !std::isfinite(g)) continue;
      g = Polish(c, g, kPolishSteps);
      if (g < lo * (1.0 - kBoundarySlack) || g >= hi * (1.0 + kBoundarySlack)) continue;
      // A root within the slack of a breakpoint is snapped onto it when the
      // breakpoint fits the equation at least as well.
      for (double edge : {lo, hi}) {
        if (edge > 0.0 && std::isfinite(edge) && std::fabs(g - edge) <= kBoundarySlack * edge &&
            EquationResidual(game, edge) <= EquationResidual(game, g)) {
          g = edge;
        }
      }
      candidates.push_back(g);
    }
  }
  std::sort(candidates.begin(), candidates.end());

  std::vector<GammaSolution> out;
  for (double g : candidates) {
    const double residual = EquationResidual(game, g);
    if (!(residual <= kResidualTolerance)) continue;
    if (!out.empty() && g - out.back().gamma <= kDedupTolerance * g) {
      if (residual < out.back().residual) out.back() = LagrangeMultipliers(game, g);
      continue;
    }
    out.push_back(LagrangeMultipliers(game, g));
  }
  if (out.empty()) ThrowNumerical("no positive root of the equilibrium equation was found");
  return out;
}

ParameterBounds ComputeParameterBounds(ValueBounds bounds, double budget_a, double budget_b) {
  if (!(bounds.w_low > 0.0) || !(bounds.w_low <= bounds.w_high) || !std::isfinite(bounds.w_high)) {
    ThrowInvalid("value bounds must satisfy 0 < w_low <= w_high");
  }
  if (!(budget_a > 0.0) || !(budget_a <= budget_b) || !std::isfinite(budget_b)) {
    ThrowInvalid("budgets must satisfy 0 < budget_a <= budget_b");
  }
  const double rho = budget_b / budget_a;
  const double q = bounds.w_low / bounds.w_high;  // <= 1
  ParameterBounds b;
  b.gamma_low = std::min(rho * q * q * q * q, q * q);
  b.gamma_high = rho / (q * q * q * q);
  const double xa = budget_a, xb = budget_b;
  b.lambda_low = std::min({b.gamma_low * b.gamma_low / (2 * xb), 1 / (2 * xb), 1 / (2 * xa),
                           1 / (2 * b.gamma_high * b.gamma_high * xa)}) *
                 q * q * q;
  b.lambda_high = std::max({b.gamma_high * b.gamma_high / (2 * xb), 1 / (2 * xb), 1 / (2 * xa),
                            1 / (2 * b.gamma_low * b.gamma_low * xa)}) /
                  (q * q * q);
  return b;
}

}  // namespace blotto
