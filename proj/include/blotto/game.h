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

#ifndef BLOTTO_GAME_H_
#define BLOTTO_GAME_H_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace blotto {

enum class Player { kA, kB };

inline Player Opponent(Player p) { return p == Player::kA ? Player::kB : Player::kA; }
inline const char* PlayerName(Player p) { return p == Player::kA ? "A" : "B"; }

// Raw description of a Generalized Colonel Blotto / Lottery Blotto instance,
// exactly as supplied by the caller.
struct GameSpec {
  std::size_t n = 0;
  double budget_a = 0.0;
  double budget_b = 0.0;
  std::vector<double> values_a;
  std::vector<double> values_b;
  double alpha = 0.5;  // share of a tied battlefield that goes to A
};

struct ValueBounds {
  double w_low = 0.0;
  double w_high = 0.0;
};

// Absolute slack allowed on a budget constraint.
inline constexpr double kBudgetTolerance = 1e-9;

// Per-battlefield allocation of one player.
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(std::vector<double> amounts) : amounts_(std::move(amounts)) {}

  std::size_t size() const { return amounts_.size(); }
  double operator[](std::size_t i) const { return amounts_[i]; }
  std::span<const double> amounts() const { return amounts_; }
  double Total() const;

  bool operator==(const Allocation&) const = default;

 private:
  std::vector<double> amounts_;
};

// A validated game in internal labels, where budget_a() <= budget_b() always
// holds. When the caller supplied X_A > X_B the players are swapped once here
// and `relabeled()` is set; the *External helpers translate caller labels.
class ValidatedGame {
 public:
  // Throws Error(kInvalidArgument) on malformed input.
  static ValidatedGame Validate(const GameSpec& raw);

  std::size_t n() const { return values_a_.size(); }
  double budget_a() const { return budget_a_; }
  double budget_b() const { return budget_b_; }
  double budget(Player p) const { return p == Player::kA ? budget_a_ : budget_b_; }
  double alpha() const { return alpha_; }

  std::span<const double> values_a() const { return values_a_; }
  std::span<const double> values_b() const { return values_b_; }
  std::span<const double> values(Player p) const {
    return p == Player::kA ? values_a() : values_b();
  }
  // Normalized values v^P_i = w^P_i / W_P.
  std::span<const double> norm_a() const { return norm_a_; }
  std::span<const double> norm_b() const { return norm_b_; }
  std::span<const double> norm(Player p) const { return p == Player::kA ? norm_a() : norm_b(); }

  double total_a() const { return total_a_; }
  double total_b() const { return total_b_; }
  double total(Player p) const { return p == Player::kA ? total_a_ : total_b_; }

  // Tight bounds: min and max over every w^P_i of both players.
  ValueBounds bounds() const { return bounds_; }

  bool relabeled() const { return relabeled_; }
  // Maps a caller-side player label to the internal one.
  Player Internal(Player external) const {
    return relabeled_ ? Opponent(external) : external;
  }

  bool is_constant_sum() const { return values_a_ == values_b_; }

  // Validation warnings (e.g. n < 3); empty for a clean game.
  const std::vector<std::string>& warnings() const { return warnings_; }

  // The GameSpec in internal labels.
  GameSpec InternalSpec() const;

 private:
  ValidatedGame() = default;

  double budget_a_ = 0.0;
  double budget_b_ = 0.0;
  double alpha_ = 0.5;
  std::vector<double> values_a_, values_b_;
  std::vector<double> norm_a_, norm_b_;
  double total_a_ = 0.0, total_b_ = 0.0;
  ValueBounds bounds_;
  bool relabeled_ = false;
  std::vector<std::string> warnings_;
};

// Throws Error(kInvalidArgument) unless `x` has n non-negative finite entries
// summing to at most `budget` + kBudgetTolerance.
void CheckFeasible(const Allocation& x, std::size_t n, double budget, const char* who);

// Winner-takes-all payoffs (Pi_A, Pi_B) in internal labels. Ties are exact
// floating-point equality and pay alpha*w^A_i to A and (1-alpha)*w^B_i to B.
std::pair<double, double> BlottoPayoff(const ValidatedGame& game, const Allocation& x_a,
                                       const Allocation& x_b);

}  // namespace blotto

#endif  // BLOTTO_GAME_H_
