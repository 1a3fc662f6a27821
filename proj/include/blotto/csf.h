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

#ifndef BLOTTO_CSF_H_
#define BLOTTO_CSF_H_

#include <functional>
#include <string>
#include <utility>

#include "blotto/game.h"

namespace blotto {

enum class CsfKind { kBlotto, kPower, kLogit, kCustom };

const char* CsfKindName(CsfKind kind);

// A pair of contest success functions (zeta_A, zeta_B) with zeta_B = 1 -
// zeta_A. `alpha` is the tie share of A; it is also the tie parameter of the
// winner-takes-all rule the CSF is compared against in the dissimilarity
// sets.
class ContestSuccessFunction {
 public:
  // zeta_A(x, y) for a user-supplied rule.
  using Evaluator = std::function<double(double x, double y)>;

  // alpha in [0, 1].
  static ContestSuccessFunction Blotto(double alpha);
  // Generalized power form; R > 0, alpha in (0, 1).
  static ContestSuccessFunction Power(double r, double alpha);
  // Generalized logit form; R > 0, alpha in (0, 1).
  static ContestSuccessFunction Logit(double r, double alpha);
  // The evaluator must satisfy the CSF axioms on [0, inf)^2; `lipschitz`
  // declares continuity, which licenses the tighter 2*delta + 5*eps budget.
  static ContestSuccessFunction Custom(Evaluator zeta_a, double alpha, bool lipschitz);

  CsfKind kind() const { return kind_; }
  double r() const { return r_; }
  double alpha() const { return alpha_; }
  bool lipschitz() const { return lipschitz_; }

  // (zeta_A(x, y), zeta_B(x, y)) for finite x, y >= 0.
  std::pair<double, double> Evaluate(double x, double y) const;
  double ShareA(double x, double y) const { return Evaluate(x, y).first; }
  double ShareB(double x, double y) const { return Evaluate(x, y).second; }

  // Winner-takes-all shares with this CSF's tie parameter.
  std::pair<double, double> Blotto(double x, double y) const;

  std::string Describe() const;

  // The same contest seen with the players exchanged:
  // zeta'_A(x, y) = zeta_B(y, x). Built-in kinds keep R and flip alpha.
  ContestSuccessFunction Swapped() const;

 private:
  ContestSuccessFunction(CsfKind kind, double r, double alpha, bool lipschitz)
      : kind_(kind), r_(r), alpha_(alpha), lipschitz_(lipschitz) {}

  CsfKind kind_;
  double r_;
  double alpha_;
  bool lipschitz_;
  Evaluator custom_;
};

// (sum_i w^A_i zeta_A(x^A_i, x^B_i), sum_i w^B_i zeta_B(x^A_i, x^B_i)) in
// internal labels; with a Blotto CSF this is bit-identical to BlottoPayoff.
std::pair<double, double> CsfPayoff(const ValidatedGame& game, const ContestSuccessFunction& csf,
                                    const Allocation& x_a, const Allocation& x_b);

}  // namespace blotto

#endif  // BLOTTO_CSF_H_
