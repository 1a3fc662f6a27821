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

#include "blotto/csf.h"

#include <cmath>
#include <sstream>

#include "blotto/error.h"
#include "shares.h"

namespace blotto {

namespace {

// Beyond this exponent the shares are 0 or 1 to double precision.
constexpr double kSaturation = 700.0;

void CheckRate(double r) {
  if (!std::isfinite(r) || r <= 0.0) ThrowInvalid("CSF parameter R must be positive and finite");
}

void CheckInteriorAlpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    ThrowInvalid("power and logit CSFs need alpha strictly inside (0, 1)");
  }
}

// alpha / (alpha + (1 - alpha) e^z) and its complement, each computed
// directly so neither loses precision near 0.
std::pair<double, double> LogisticShares(double z, double alpha) {
  if (z == 0.0) return {alpha, 1.0 - alpha};
  if (z > kSaturation) return {0.0, 1.0};
  if (z < -kSaturation) return {1.0, 0.0};
  const double beta = 1.0 - alpha;
  return {alpha / (alpha + beta * std::exp(z)), beta / (beta + alpha * std::exp(-z))};
}

}  // namespace

const char* CsfKindName(CsfKind kind) {
  switch (kind) {
    case CsfKind::kBlotto: return "blotto";
    case CsfKind::kPower: return "power";
    case CsfKind::kLogit: return "logit";
    case CsfKind::kCustom: return "custom";
  }
  return "unknown";
}

ContestSuccessFunction ContestSuccessFunction::Blotto(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) ThrowInvalid("alpha must lie in [0, 1]");
  return ContestSuccessFunction(CsfKind::kBlotto, 0.0, alpha, false);
}

ContestSuccessFunction ContestSuccessFunction::Power(double r, double alpha) {
  CheckRate(r);
  CheckInteriorAlpha(alpha);
  return ContestSuccessFunction(CsfKind::kPower, r, alpha, true);
}

ContestSuccessFunction ContestSuccessFunction::Logit(double r, double alpha) {
  CheckRate(r);
  CheckInteriorAlpha(alpha);
  return ContestSuccessFunction(CsfKind::kLogit, r, alpha, true);
}

ContestSuccessFunction ContestSuccessFunction::Custom(Evaluator zeta_a, double alpha,
                                                      bool lipschitz) {
  if (!zeta_a) ThrowInvalid("custom CSF needs an evaluator");
  if (!(alpha >= 0.0 && alpha <= 1.0)) ThrowInvalid("alpha must lie in [0, 1]");
  ContestSuccessFunction csf(CsfKind::kCustom, 0.0, alpha, lipschitz);
  csf.custom_ = std::move(zeta_a);
  return csf;
}

ContestSuccessFunction ContestSuccessFunction::Swapped() const {
  ContestSuccessFunction csf = *this;
  csf.alpha_ = 1.0 - alpha_;
  if (kind_ == CsfKind::kCustom) {
    csf.custom_ = [inner = custom_](double x, double y) { return 1.0 - inner(y, x); };
  }
  return csf;
}

std::pair<double, double> ContestSuccessFunction::Evaluate(double x, double y) const {
  if (!(x >= 0.0) || !(y >= 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
    std::ostringstream os;
    os << "CSF arguments must be finite and non-negative, got (" << x << ", " << y << ")";
    ThrowInvalid(os.str());
  }
  switch (kind_) {
    case CsfKind::kBlotto:
      return internal::BlottoShares(x, y, alpha_);
    case CsfKind::kPower:
      if (x == y) return {alpha_, 1.0 - alpha_};
      if (x == 0.0) return {0.0, 1.0};
      if (y == 0.0) return {1.0, 0.0};
      // (y/x)^R = e^z
      return LogisticShares(r_ * std::log(y / x), alpha_);
    case CsfKind::kLogit:
      return LogisticShares(r_ * (y - x), alpha_);
    case CsfKind::kCustom: {
      const double za = custom_(x, y);
      if (!(za >= 0.0 && za <= 1.0)) {
        std::ostringstream os;
        os << "custom CSF returned " << za << " at (" << x << ", " << y << ")";
        ThrowInvalid(os.str());
      }
      return {za, 1.0 - za};
    }
  }
  ThrowInvalid("unknown CSF kind");
}

std::pair<double, double> ContestSuccessFunction::Blotto(double x, double y) const {
  return internal::BlottoShares(x, y, alpha_);
}

std::string ContestSuccessFunction::Describe() const {
  std::ostringstream os;
  os << CsfKindName(kind_) << "(";
  if (kind_ == CsfKind::kPower || kind_ == CsfKind::kLogit) os << "R=" << r_ << ", ";
  os << "alpha=" << alpha_ << ")";
  return os.str();
}

std::pair<double, double> CsfPayoff(const ValidatedGame& game, const ContestSuccessFunction& csf,
                                    const Allocation& x_a, const Allocation& x_b) {
  CheckFeasible(x_a, game.n(), game.budget_a(), "A");
  CheckFeasible(x_b, game.n(), game.budget_b(), "B");
  double pa = 0.0, pb = 0.0;
  for (std::size_t i = 0; i < game.n(); ++i) {
    const auto [sa, sb] = csf.Evaluate(x_a[i], x_b[i]);
    pa += game.values_a()[i] * sa;
    pb += game.values_b()[i] * sb;
  }
  return {pa, pb};
}

}  // namespace blotto
