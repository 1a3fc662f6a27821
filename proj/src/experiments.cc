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

#include "blotto/experiments.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>

#include "blotto/best_response.h"
#include "blotto/csf_analysis.h"
#include "blotto/error.h"
#include "blotto/gamma_solver.h"
#include "parallel.h"

namespace blotto {
namespace {

constexpr const char* kFamilies[] = {"uniform_values", "two_tier", "random_bounded",
                                     "constant_sum_random"};

std::string Num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

double CallerAlpha(const ExperimentConfig& c) {
  switch (c.game.kind) {
    case GameSource::Kind::kGenerator:
      return c.game.params.alpha;
    default:
      return c.game.spec.alpha;
  }
}

}  // namespace

bool IsKnownFamily(const std::string& family) {
  return std::find(std::begin(kFamilies), std::end(kFamilies), family) != std::end(kFamilies);
}

GameSpec GenerateGame(const std::string& family, const FamilyParams& params, uint64_t seed) {
  if (!IsKnownFamily(family)) ThrowConfig("unknown game family '" + family + "'");
  if (!(params.w_low > 0.0) || !(params.w_low <= params.w_high) || !std::isfinite(params.w_high)) {
    ThrowConfig("family bounds need 0 < w_low <= w_high, got w_low=" + Num(params.w_low) +
                " w_high=" + Num(params.w_high));
  }
  GameSpec g;
  g.n = params.n;
  g.budget_a = params.budget_a;
  g.budget_b = params.budget_b;
  g.alpha = params.alpha;
  g.values_a.resize(params.n);
  g.values_b.resize(params.n);
  RandomStream root(seed);
  RandomStream ra = root.Split(1), rb = root.Split(2);
  for (std::size_t i = 0; i < params.n; ++i) {
    if (family == "uniform_values") {
      g.values_a[i] = g.values_b[i] = 1.0;
    } else if (family == "two_tier") {
      const bool first = i < (params.n + 1) / 2;
      g.values_a[i] = first ? params.w_high : params.w_low;
      g.values_b[i] = first ? params.w_low : params.w_high;
    } else {
      g.values_a[i] = ra.Uniform(params.w_low, params.w_high);
      g.values_b[i] = family == "constant_sum_random" ? g.values_a[i]
                                                      : rb.Uniform(params.w_low, params.w_high);
    }
  }
  return g;
}

const char* SweepAxisName(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kN:
      return "n";
    case SweepAxis::kR:
      return "R";
    case SweepAxis::kEps:
      return "eps";
    case SweepAxis::kBudgetRatio:
      return "budget_ratio";
  }
  return "unknown";
}

ContestSuccessFunction CsfSpec::Build(double game_alpha) const {
  const double a = alpha.value_or(game_alpha);
  switch (kind) {
    case CsfKind::kBlotto:
      return ContestSuccessFunction::Blotto(a);
    case CsfKind::kPower:
      return ContestSuccessFunction::Power(r, a);
    case CsfKind::kLogit:
      return ContestSuccessFunction::Logit(r, a);
    case CsfKind::kCustom:
      break;
  }
  ThrowConfig("custom rules cannot be described in a config");
}

GameSpec ResolveGame(const ExperimentConfig& config, uint64_t seed) {
  if (config.game.kind == GameSource::Kind::kGenerator) {
    return GenerateGame(config.game.family, config.game.params, config.game.game_seed.value_or(seed));
  }
  return config.game.spec;
}

ExperimentConfig AtAxisValue(const ExperimentConfig& config, double value) {
  ExperimentConfig c = config;
  switch (config.axis) {
    case SweepAxis::kN:
      c.game.params.n = static_cast<std::size_t>(value);
      break;
    case SweepAxis::kR:
      c.csf.r = value;
      break;
    case SweepAxis::kEps:
      c.eps = value;
      break;
    case SweepAxis::kBudgetRatio:
      if (c.game.kind == GameSource::Kind::kGenerator) {
        c.game.params.budget_b = c.game.params.budget_a * value;
      } else {
        c.game.spec.budget_b = c.game.spec.budget_a * value;
      }
      break;
  }
  return c;
}

void ValidateSweep(const ExperimentConfig& config) {
  if (config.values.empty()) ThrowConfig("sweep needs at least one axis value");
  if (config.repetitions == 0) ThrowConfig("repetitions must be positive");
  if (config.m_samples == 0) ThrowConfig("m_samples must be positive");
  if (config.grid_points < 2) ThrowConfig("grid_points must be at least 2");
  const bool generated = config.game.kind == GameSource::Kind::kGenerator;
  if (generated) {
    if (!IsKnownFamily(config.game.family)) {
      ThrowConfig("unknown game family '" + config.game.family + "'");
    }
    (void)GenerateGame(config.game.family, config.game.params, 0);
  }
  const std::string axis = SweepAxisName(config.axis);
  for (double v : config.values) {
    if (!(v > 0.0) || !std::isfinite(v)) ThrowConfig("axis " + axis + " value must be positive: " + Num(v));
  }
  switch (config.axis) {
    case SweepAxis::kN:
      if (!generated) ThrowConfig("the n axis needs a generated game");
      for (double v : config.values) {
        if (v != std::floor(v) || v < 2 || v > 1e7) ThrowConfig("n values must be integers >= 2: " + Num(v));
      }
      break;
    case SweepAxis::kR:
      if (config.csf.kind != CsfKind::kPower && config.csf.kind != CsfKind::kLogit) {
        ThrowConfig("the R axis needs a power or logit rule");
      }
      break;
    default:
      break;
  }
  // Rule parameters and eps, for every value the sweep will use.
  for (double v : config.values) {
    const ExperimentConfig c = AtAxisValue(config, v);
    try {
      const auto csf = c.csf.Build(CallerAlpha(c));
      if (csf.kind() != CsfKind::kBlotto) CheckEpsilon(csf, c.eps);
    } catch (const Error& e) {
      ThrowConfig(std::string("rule: ") + e.what());
    }
  }
}

SweepRecord RunRecord(const ExperimentConfig& config, std::size_t value_index,
                      std::size_t repetition, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  SweepRecord rec;
  rec.index = value_index * config.repetitions + repetition;
  rec.axis = config.axis;
  rec.value = config.values.at(value_index);
  rec.repetition = repetition;
  rec.seed = RecordSeed(config.seed, value_index, repetition);
  rec.eps_a = rec.eps_b = rec.ci_a = rec.ci_b = nan;
  try {
    const ExperimentConfig c = AtAxisValue(config, rec.value);
    const GameSpec spec = ResolveGame(c, rec.seed);
    const auto game = ValidatedGame::Validate(spec);
    const auto roots = SolveGamma(game);
    if (c.root_index >= roots.size()) {
      ThrowInvalid("root_index " + std::to_string(c.root_index) + " out of range: " +
                   std::to_string(roots.size()) + " root(s)");
    }
    const auto& sol = roots[c.root_index];
    const auto csf = c.csf.Build(spec.alpha);
    const auto rule = game.relabeled() ? csf.Swapped() : csf;
    ExploitabilityOptions opt;
    opt.m_samples = c.m_samples;
    opt.grid_points = c.grid_points;
    opt.seed = MonteCarloSeed(rec.seed);
    const auto reports = EstimateExploitability(game, sol, rule, opt);
    const auto& ra = reports[static_cast<int>(game.Internal(Player::kA))];
    const auto& rb = reports[static_cast<int>(game.Internal(Player::kB))];
    std::optional<double> delta;
    if (rule.kind() != CsfKind::kBlotto) delta = ComputeDeltaBound(game, sol, rule, c.eps).delta;
    rec.eps_a = ra.epsilon_hat;
    rec.eps_b = rb.epsilon_hat;
    rec.ci_a = ra.ci_halfwidth / game.total(ra.player);
    rec.ci_b = rb.ci_halfwidth / game.total(rb.player);
    rec.delta = delta;
  } catch (const std::exception& e) {
    rec.error = e.what();
    if (rec.error.empty()) rec.error = "unknown error";
  }
  if (timing) {
    rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return rec;
}

std::vector<SweepRecord> RunSweep(const ExperimentConfig& config, const SweepOptions& options) {
  ValidateSweep(config);
  const std::size_t reps = config.repetitions;
  const std::size_t count = config.values.size() * reps;
  std::vector<SweepRecord> records(count);
  std::mutex mu;
  internal::ParallelFor(count, options.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      SweepRecord rec = RunRecord(config, k / reps, k % reps, options.timing);
      std::lock_guard<std::mutex> lock(mu);
      if (options.on_record) options.on_record(rec);
      records[k] = std::move(rec);
    }
  });
  return records;
}

double Median(std::vector<double> xs) {
  if (xs.empty()) ThrowInvalid("median of an empty list");
  std::sort(xs.begin(), xs.end());
  const std::size_t h = xs.size() / 2;
  return xs.size() % 2 ? xs[h] : 0.5 * (xs[h - 1] + xs[h]);
}

double FitSlope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) ThrowInvalid("slope needs two or more paired points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= x.size();
  my /= y.size();
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (!(sxx > 0.0)) ThrowInvalid("slope needs two distinct x values");
  return sxy / sxx;
}

SweepSummary Summarize(SweepAxis axis, const std::vector<SweepRecord>& records) {
  SweepSummary summary;
  summary.axis = axis;
  std::vector<double> order;
  for (const auto& r : records) {
    if (std::find(order.begin(), order.end(), r.value) == order.end()) order.push_back(r.value);
  }
  std::vector<double> lx, ly;
  for (double v : order) {
    SweepSummaryRow row;
    row.value = v;
    std::vector<double> ea, eb, em, d;
    for (const auto& r : records) {
      if (r.value != v || !r.error.empty()) continue;
      ea.push_back(r.eps_a);
      eb.push_back(r.eps_b);
      em.push_back(std::max(r.eps_a, r.eps_b));
      if (r.delta) d.push_back(*r.delta);
    }
    row.count = ea.size();
    if (row.count == 0) {
      row.median_eps_a = row.median_eps_b = row.median_eps = std::numeric_limits<double>::quiet_NaN();
    } else {
      row.median_eps_a = Median(ea);
      row.median_eps_b = Median(eb);
      row.median_eps = Median(em);
      if (!d.empty()) row.median_delta = Median(d);
      if (v > 0.0 && row.median_eps > 0.0) {
        lx.push_back(std::log(v));
        ly.push_back(std::log(row.median_eps));
      }
    }
    summary.rows.push_back(row);
  }
  if (lx.size() >= 2) summary.loglog_slope = FitSlope(lx, ly);
  return summary;
}

}  // namespace blotto
