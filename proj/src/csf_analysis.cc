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

#include "blotto/csf_analysis.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "blotto/error.h"

namespace blotto {
namespace {

// Logs of the four ratio thresholds of the power form.
struct PowerLogs {
  double x_lo, x_hi, y_lo, y_hi;  // log c for the four interval ends
};

PowerLogs MakePowerLogs(double r, double alpha, double eps) {
  const double a = std::log(alpha), b = std::log1p(-alpha);
  const double e = std::log(eps), f = std::log1p(-eps);
  return {(e + b - f - a) / r, (f + b - e - a) / r, (e + a - f - b) / r, (f + a - e - b) / r};
}

// Logit half-widths: distance below (lo) and above (hi) the fixed bid on the
// X side. The Y side swaps them.
std::pair<double, double> LogitWidths(double r, double alpha, double eps) {
  const double a = std::log(alpha), b = std::log1p(-alpha);
  const double e = std::log(eps), f = std::log1p(-eps);
  return {(a + f - e - b) / r, (b + f - a - e) / r};
}

std::optional<Interval> Below(double lo, double fixed) {
  lo = std::max(lo, 0.0);
  if (!(lo < fixed)) return std::nullopt;
  return Interval{lo, fixed, true, false};
}

std::optional<Interval> Above(double fixed, double hi, double bound) {
  hi = std::min(hi, bound);
  if (!(hi > fixed)) return std::nullopt;
  return Interval{fixed, hi, false, true};
}

// Smallest t in [lo, hi] with pred(t), assuming pred is monotone false->true
// and pred(hi) holds. Returns a point at most 1e-12 relative below the
// threshold so the reported set never undercounts.
template <typename Pred>
double FirstTrue(double lo, double hi, Pred pred) {
  if (pred(lo)) return lo;
  for (int it = 0; it < 200 && hi - lo > 1e-12 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    (pred(mid) ? hi : lo) = mid;
  }
  return lo;
}

template <typename Pred>
double LastTrue(double lo, double hi, Pred pred) {
  if (pred(hi)) return hi;
  for (int it = 0; it < 200 && hi - lo > 1e-12 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    (pred(mid) ? lo : hi) = mid;
  }
  return hi;
}

// Generic search for rules without a closed form. `share` is the share of
// the player whose bid varies, increasing in that bid.
template <typename Share>
DissimilaritySet SearchSet(Share share, double fixed, double eps, double tie, double bound) {
  DissimilaritySet set;
  if (std::fabs(share(fixed) - tie) >= eps) set.singleton = fixed;
  if (fixed > 0.0) {
    const double just_below = std::nextafter(fixed, 0.0);
    auto in = [&](double t) { return share(t) >= eps; };
    if (in(just_below)) set.lower = Interval{FirstTrue(0.0, just_below, in), fixed, true, false};
  }
  if (fixed < bound) {
    const double just_above = std::nextafter(fixed, bound);
    auto in = [&](double t) { return share(t) <= 1.0 - eps; };
    if (in(just_above)) set.upper = Interval{fixed, LastTrue(just_above, bound, in), false, true};
  }
  return set;
}

void CheckFixed(double fixed, double bound) {
  if (!(bound > 0.0) || !std::isfinite(bound)) ThrowInvalid("bound must be positive and finite");
  if (!(fixed >= 0.0 && fixed <= bound)) ThrowInvalid("fixed bid must lie in [0, bound]");
}

}  // namespace

bool DissimilaritySet::Contains(double x) const {
  return (singleton && *singleton == x) || (lower && lower->Contains(x)) ||
         (upper && upper->Contains(x));
}

void CheckEpsilon(const ContestSuccessFunction& csf, double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) ThrowInvalid("eps must be positive");
  if (csf.kind() == CsfKind::kBlotto) return;
  const double cap = std::min(csf.alpha(), 1.0 - csf.alpha());
  if (!(eps < cap)) ThrowInvalid("eps must be below min(alpha, 1 - alpha) = " + std::to_string(cap));
}

DissimilaritySet DissimilaritySetX(const ContestSuccessFunction& csf, double y_star, double eps,
                                   double bound) {
  CheckEpsilon(csf, eps);
  CheckFixed(y_star, bound);
  DissimilaritySet set;
  switch (csf.kind()) {
    case CsfKind::kBlotto:
      return set;
    case CsfKind::kPower: {
      if (y_star == 0.0) return set;
      const auto c = MakePowerLogs(csf.r(), csf.alpha(), eps);
      set.lower = Below(y_star * std::exp(c.x_lo), y_star);
      set.upper = Above(y_star, y_star * std::exp(c.x_hi), bound);
      return set;
    }
    case CsfKind::kLogit: {
      const auto [lo, hi] = LogitWidths(csf.r(), csf.alpha(), eps);
      set.lower = Below(y_star - lo, y_star);
      set.upper = Above(y_star, y_star + hi, bound);
      return set;
    }
    case CsfKind::kCustom:
      return SearchSet([&](double x) { return csf.ShareA(x, y_star); }, y_star, eps, csf.alpha(),
                       bound);
  }
  return set;
}

DissimilaritySet DissimilaritySetY(const ContestSuccessFunction& csf, double x_star, double eps,
                                   double bound) {
  CheckEpsilon(csf, eps);
  CheckFixed(x_star, bound);
  DissimilaritySet set;
  switch (csf.kind()) {
    case CsfKind::kBlotto:
      return set;
    case CsfKind::kPower: {
      if (x_star == 0.0) return set;
      const auto c = MakePowerLogs(csf.r(), csf.alpha(), eps);
      set.lower = Below(x_star * std::exp(c.y_lo), x_star);
      set.upper = Above(x_star, x_star * std::exp(c.y_hi), bound);
      return set;
    }
    case CsfKind::kLogit: {
      const auto [lo, hi] = LogitWidths(csf.r(), csf.alpha(), eps);
      set.lower = Below(x_star - hi, x_star);
      set.upper = Above(x_star, x_star + lo, bound);
      return set;
    }
    case CsfKind::kCustom:
      return SearchSet([&](double y) { return csf.ShareB(x_star, y); }, x_star, eps,
                       1.0 - csf.alpha(), bound);
  }
  return set;
}

double SetMass(const UniformTypeDistribution& dist, const DissimilaritySet& set) {
  double mass = 0.0;
  if (set.lower) mass += dist.Mass(*set.lower);
  if (set.upper) mass += dist.Mass(*set.upper);
  if (set.singleton) mass += dist.ProbEqual(*set.singleton);
  return std::min(mass, 1.0);
}

const char* DeltaMethodName(DeltaMethod method) {
  switch (method) {
    case DeltaMethod::kNumericMax:
      return "numeric_max";
    case DeltaMethod::kClosedFormPower:
      return "closed_form_power";
    case DeltaMethod::kClosedFormLogit:
      return "closed_form_logit";
  }
  return "unknown";
}

double ClosedFormDelta(const ValidatedGame& game, const ContestSuccessFunction& csf, double eps) {
  CheckEpsilon(csf, eps);
  double width = 0.0;
  if (csf.kind() == CsfKind::kPower) {
    const auto c = MakePowerLogs(csf.r(), csf.alpha(), eps);
    const double spread = std::max({-std::expm1(c.x_lo), std::expm1(c.x_hi), -std::expm1(c.y_lo),
                                    std::expm1(c.y_hi)});
    width = 2.0 * game.budget_b() * spread;
  } else if (csf.kind() == CsfKind::kLogit) {
    const auto [lo, hi] = LogitWidths(csf.r(), csf.alpha(), eps);
    width = std::max(lo, hi);
  } else {
    ThrowInvalid("closed-form delta needs a power or logit CSF");
  }
  const auto pb = ComputeParameterBounds(game.bounds(), game.budget_a(), game.budget_b());
  const auto vb = game.bounds();
  const double value =
      2.0 * static_cast<double>(game.n()) * pb.lambda_high * width * vb.w_high / vb.w_low;
  return std::min(1.0, value);
}

DeltaBound ComputeDeltaBound(const ValidatedGame& game, const GammaSolution& solution,
                             const ContestSuccessFunction& csf, double eps) {
  CheckEpsilon(csf, eps);
  DeltaBound out;
  out.epsilon = eps;
  if (csf.kind() == CsfKind::kBlotto) return out;

  const double bound = 2.0 * game.budget_b();
  const auto marginals = UniformTypeMarginals(game, solution);

  std::vector<double> grid;
  grid.reserve(1000);
  for (int k = 0; k < 1000; ++k) grid.push_back(std::min(bound, bound * k / 999.0));
  grid.push_back(std::numeric_limits<double>::denorm_min());

  // Kinks of the mass as a function of the fixed bid, given the support end b.
  auto kinks = [&](double b, bool x_side) {
    std::vector<double> pts = {b};
    if (csf.kind() == CsfKind::kPower) {
      const auto c = MakePowerLogs(csf.r(), csf.alpha(), eps);
      const double lo = x_side ? c.x_lo : c.y_lo, hi = x_side ? c.x_hi : c.y_hi;
      pts.insert(pts.end(), {b * std::exp(-lo), b * std::exp(-hi), bound * std::exp(-hi)});
    } else if (csf.kind() == CsfKind::kLogit) {
      auto [lo, hi] = LogitWidths(csf.r(), csf.alpha(), eps);
      if (!x_side) std::swap(lo, hi);
      pts.insert(pts.end(), {lo, b + lo, b - hi, bound - hi});
    }
    return pts;
  };

  bool first = true;
  for (int side = 0; side < 2; ++side) {
    const bool x_side = side == 0;
    const auto& dists = x_side ? marginals.a : marginals.b;
    for (std::size_t i = 0; i < dists.size(); ++i) {
      std::vector<double> pts = grid;
      for (double p : kinks(dists[i].upper(), x_side)) {
        if (p >= 0.0 && p <= bound) pts.push_back(p);
      }
      for (double t : pts) {
        const auto set = x_side ? DissimilaritySetX(csf, t, eps, bound)
                                : DissimilaritySetY(csf, t, eps, bound);
        const double mass = SetMass(dists[i], set);
        if (first || mass > out.raw_max) {
          first = false;
          out.raw_max = mass;
          out.argmax_point = t;
          out.argmax_battlefield = i;
          out.argmax_side = x_side ? Player::kA : Player::kB;
        }
      }
    }
  }
  out.delta = std::min(1.0, out.raw_max * (1.0 + 1e-6));
  out.grid_supremum = csf.kind() == CsfKind::kCustom && !csf.lipschitz();
  if (csf.kind() == CsfKind::kPower || csf.kind() == CsfKind::kLogit) {
    out.closed_form = ClosedFormDelta(game, csf, eps);
    out.closed_form_method = csf.kind() == CsfKind::kPower ? DeltaMethod::kClosedFormPower
                                                           : DeltaMethod::kClosedFormLogit;
  }
  return out;
}

}  // namespace blotto
