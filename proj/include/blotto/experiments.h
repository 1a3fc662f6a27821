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

#ifndef BLOTTO_EXPERIMENTS_H_
#define BLOTTO_EXPERIMENTS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "blotto/csf.h"
#include "blotto/game.h"
#include "blotto/random_stream.h"

namespace blotto {

// Parameters shared by all generated game families.
struct FamilyParams {
  std::size_t n = 10;
  double budget_a = 1.0;
  double budget_b = 2.0;
  double w_low = 1.0;
  double w_high = 3.0;
  double alpha = 0.5;
};

// Families:
//   uniform_values       every value is 1
//   two_tier             A values w_high on the first half and w_low on the
//                        rest, B the other way round
//   random_bounded       independent U[w_low, w_high] values for both players
//   constant_sum_random  like random_bounded with values_b = values_a
// Throws Error(kConfig) for an unknown family or w_low > w_high.
GameSpec GenerateGame(const std::string& family, const FamilyParams& params, uint64_t seed);

bool IsKnownFamily(const std::string& family);

enum class SweepAxis { kN, kR, kEps, kBudgetRatio };

const char* SweepAxisName(SweepAxis axis);

struct CsfSpec {
  CsfKind kind = CsfKind::kBlotto;
  double r = 1.0;
  std::optional<double> alpha;  // defaults to the game's tie parameter

  ContestSuccessFunction Build(double game_alpha) const;
};

struct GameSource {
  enum class Kind { kInline, kFile, kGenerator };
  Kind kind = Kind::kInline;
  GameSpec spec;  // kInline, or kFile after loading
  std::string path;
  std::string family;
  FamilyParams params;
  std::optional<uint64_t> game_seed;  // fixed generator seed, else per record
};

struct ExperimentConfig {
  GameSource game;
  std::string task;  // may be empty; the CLI subcommand decides
  CsfSpec csf;
  SweepAxis axis = SweepAxis::kN;
  std::vector<double> values;
  std::size_t m_samples = 100000;
  std::size_t grid_points = 201;
  std::size_t repetitions = 1;
  uint64_t seed = 0;
  double eps = 0.05;
  std::size_t root_index = 0;  // which root of the equation to use
  // sample
  std::size_t samples = 10;
  Player player = Player::kA;  // caller label
  // payoff, caller labels
  std::vector<double> x_a;
  std::vector<double> x_b;
  std::string out;
  std::string format = "json";
};

// Builds the game of `config` (generator games use `seed` when no fixed
// game seed is given).
GameSpec ResolveGame(const ExperimentConfig& config, uint64_t seed);

struct SweepRecord {
  std::size_t index = 0;  // canonical position: value index * repetitions + repetition
  SweepAxis axis = SweepAxis::kN;
  double value = 0.0;
  std::size_t repetition = 0;
  uint64_t seed = 0;
  // Caller labels; ci_* are 95% half-widths on the IU value divided by W_P.
  double eps_a = 0.0;
  double eps_b = 0.0;
  double ci_a = 0.0;
  double ci_b = 0.0;
  std::optional<double> delta;  // lottery rules only
  double ms = 0.0;
  std::string error;  // empty on success
};

// Seeds of record (k, r): the first builds the game (when generated), the
// second drives the Monte Carlo.
inline uint64_t RecordSeed(uint64_t root, std::size_t value_index, std::size_t repetition) {
  return RandomStream::Derive(root, value_index, repetition);
}
inline uint64_t MonteCarloSeed(uint64_t record_seed) { return RandomStream::Mix(record_seed); }

// `config` with the sweep axis set to `value`.
ExperimentConfig AtAxisValue(const ExperimentConfig& config, double value);

// Throws Error(kConfig) when the sweep cannot run: empty value list, zero
// counts, an axis the game source or rule cannot vary, eps out of range.
void ValidateSweep(const ExperimentConfig& config);

// One record; component errors land in `error`.
SweepRecord RunRecord(const ExperimentConfig& config, std::size_t value_index,
                      std::size_t repetition, bool timing);

struct SweepSummaryRow {
  double value = 0.0;
  std::size_t count = 0;  // successful records
  double median_eps_a = 0.0;
  double median_eps_b = 0.0;
  double median_eps = 0.0;  // median of max(eps_a, eps_b)
  std::optional<double> median_delta;
};

struct SweepSummary {
  SweepAxis axis = SweepAxis::kN;
  std::vector<SweepSummaryRow> rows;
  // Least-squares slope of log(median_eps) against log(value); absent when
  // fewer than two rows have positive value and positive median.
  std::optional<double> loglog_slope;
};

struct SweepOptions {
  int threads = 1;
  bool timing = false;  // fill `ms`; off keeps output byte-stable
  // Called once per finished record, in completion order, never
  // concurrently.
  std::function<void(const SweepRecord&)> on_record;
};

// Record (k, r) for value index k and repetition r uses the seed
// RandomStream::Derive(config.seed, k, r) both to generate its game (unless
// the game seed is fixed) and, mixed once more, to drive the Monte Carlo.
// Component failures end up in SweepRecord::error; only config errors throw.
std::vector<SweepRecord> RunSweep(const ExperimentConfig& config, const SweepOptions& options);

SweepSummary Summarize(SweepAxis axis, const std::vector<SweepRecord>& records);

// Median of a non-empty list (mean of the two middle elements when even).
double Median(std::vector<double> xs);

// Least-squares slope of y against x.
double FitSlope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace blotto

#endif  // BLOTTO_EXPERIMENTS_H_
