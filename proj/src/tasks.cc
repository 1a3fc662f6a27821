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

#include "tasks.h"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "blotto/best_response.h"
#include "blotto/config.h"
#include "blotto/csf_analysis.h"
#include "blotto/error.h"
#include "blotto/experiments.h"
#include "blotto/gamma_solver.h"
#include "blotto/iu_strategy.h"
#include "json.hpp"

namespace blotto::internal {
namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

std::string Csv(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

const char* Label(Player p) { return p == Player::kA ? "A" : "B"; }

// Everything a single (non-sweep) task needs.
struct Context {
  ExperimentConfig config;
  uint64_t seed = 0;  // record seed of the one-point run
  std::optional<ValidatedGame> game;
  ContestSuccessFunction rule = ContestSuccessFunction::Blotto(0.5);  // caller labels
  ContestSuccessFunction internal_rule = ContestSuccessFunction::Blotto(0.5);

  ValidatedGame& g() { return *game; }
};

Context Prepare(ExperimentConfig config) {
  Context ctx;
  ctx.seed = RecordSeed(config.seed, 0, 0);
  if (config.game.kind == GameSource::Kind::kInline && config.game.spec.values_a.empty()) {
    ThrowConfig("config has no game");
  }
  const GameSpec spec = ResolveGame(config, ctx.seed);
  try {
    ctx.game = ValidatedGame::Validate(spec);
    ctx.rule = config.csf.Build(spec.alpha);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kNumerical) throw;
    ThrowConfig(e.what());
  }
  ctx.internal_rule = ctx.g().relabeled() ? ctx.rule.Swapped() : ctx.rule;
  ctx.config = std::move(config);
  return ctx;
}

GammaSolution PickRoot(Context& ctx, const std::vector<GammaSolution>& roots) {
  if (ctx.config.root_index >= roots.size()) {
    ThrowConfig("root_index " + std::to_string(ctx.config.root_index) + " out of range: " +
                std::to_string(roots.size()) + " root(s)");
  }
  return roots[ctx.config.root_index];
}

bool IsCsv(const ExperimentConfig& c) { return c.format == "csv"; }

TaskOutput Solve(Context& ctx) {
  const auto roots = SolveGamma(ctx.g());
  (void)PickRoot(ctx, roots);
  std::ostringstream os;
  if (IsCsv(ctx.config)) {
    os << "root,gamma,lambda_a,lambda_b,residual,omega_size\n";
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const auto& r = roots[k];
      os << k << ',' << Csv(r.gamma) << ',' << Csv(r.lambda_a) << ',' << Csv(r.lambda_b) << ','
         << Csv(r.residual) << ',' << r.omega_a.size() << '\n';
    }
    return {os.str(), std::nullopt};
  }
  const auto& g = ctx.g();
  const auto pb = ComputeParameterBounds(g.bounds(), g.budget_a(), g.budget_b());
  ordered doc;
  doc["task"] = "solve";
  doc["n"] = g.n();
  doc["relabeled"] = g.relabeled();
  doc["warnings"] = g.warnings();
  doc["bounds"] = {{"gamma_low", pb.gamma_low},
                   {"gamma_high", pb.gamma_high},
                   {"lambda_low", pb.lambda_low},
                   {"lambda_high", pb.lambda_high}};
  doc["selected"] = ctx.config.root_index;
  doc["roots"] = ordered::array();
  for (const auto& r : roots) {
    doc["roots"].push_back({{"gamma", r.gamma},
                            {"lambda_a", r.lambda_a},
                            {"lambda_b", r.lambda_b},
                            {"residual", r.residual},
                            {"omega_a", r.omega_a}});
  }
  return {doc.dump(2) + "\n", std::nullopt};
}

TaskOutput Sample(Context& ctx, int threads) {
  const auto& c = ctx.config;
  if (c.samples == 0) ThrowConfig("samples must be positive");
  const auto sol = PickRoot(ctx, SolveGamma(ctx.g()));
  const IUSampler sampler(ctx.g(), sol);
  const auto batch = DrawBatch(sampler, ctx.g().Internal(c.player), c.samples,
                               RandomStream(MonteCarloSeed(ctx.seed)), threads, true);
  std::ostringstream os;
  if (IsCsv(c)) {
    for (std::size_t i = 0; i < ctx.g().n(); ++i) os << (i ? "," : "") << "x" << i;
    os << '\n';
    for (const auto& d : batch.draws) {
      for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << Csv(d[i]);
      os << '\n';
    }
    return {os.str(), std::nullopt};
  }
  ordered doc;
  doc["task"] = "sample";
  doc["player"] = Label(c.player);
  doc["root"] = c.root_index;
  doc["seed"] = c.seed;
  doc["draws"] = ordered::array();
  for (const auto& d : batch.draws) {
    doc["draws"].push_back(std::vector<double>(d.amounts().begin(), d.amounts().end()));
  }
  return {doc.dump(2) + "\n", std::nullopt};
}

TaskOutput Payoff(Context& ctx) {
  const auto& c = ctx.config;
  const auto& g = ctx.g();
  Allocation xa(c.x_a), xb(c.x_b);
  try {
    CheckFeasible(xa, g.n(), g.relabeled() ? g.budget_b() : g.budget_a(), "x_a");
    CheckFeasible(xb, g.n(), g.relabeled() ? g.budget_a() : g.budget_b(), "x_b");
  } catch (const Error& e) {
    ThrowConfig(e.what());
  }
  if (g.relabeled()) std::swap(xa, xb);
  auto [pa, pb] = CsfPayoff(g, ctx.internal_rule, xa, xb);
  if (g.relabeled()) std::swap(pa, pb);
  if (IsCsv(c)) return {"pi_a,pi_b\n" + Csv(pa) + "," + Csv(pb) + "\n", std::nullopt};
  ordered doc;
  doc["task"] = "payoff";
  doc["rule"] = ctx.rule.Describe();
  doc["pi_a"] = pa;
  doc["pi_b"] = pb;
  return {doc.dump(2) + "\n", std::nullopt};
}

TaskOutput Exploit(Context& ctx, int threads) {
  const auto& c = ctx.config;
  if (c.m_samples == 0) ThrowConfig("m_samples must be positive");
  if (c.grid_points < 2) ThrowConfig("grid_points must be at least 2");
  const auto sol = PickRoot(ctx, SolveGamma(ctx.g()));
  ExploitabilityOptions opt;
  opt.m_samples = c.m_samples;
  opt.grid_points = c.grid_points;
  opt.seed = MonteCarloSeed(ctx.seed);
  opt.threads = threads;
  const auto reports = EstimateExploitability(ctx.g(), sol, ctx.internal_rule, opt);
  std::ostringstream os;
  if (IsCsv(c)) os << "player,iu_value,br_value,epsilon_hat,ci_halfwidth,m_samples,grid_points,seed\n";
  ordered doc;
  doc["task"] = "exploit";
  doc["rule"] = ctx.rule.Describe();
  doc["root"] = c.root_index;
  doc["reports"] = ordered::array();
  for (Player p : {Player::kA, Player::kB}) {
    const auto& r = reports[static_cast<int>(ctx.g().Internal(p))];
    if (IsCsv(c)) {
      os << Label(p) << ',' << Csv(r.iu_value) << ',' << Csv(r.br_value) << ','
         << Csv(r.epsilon_hat) << ',' << Csv(r.ci_halfwidth) << ',' << r.m_samples << ','
         << r.grid_points << ',' << r.seed << '\n';
    } else {
      doc["reports"].push_back({{"player", Label(p)},
                                {"iu_value", r.iu_value},
                                {"br_value", r.br_value},
                                {"epsilon_hat", r.epsilon_hat},
                                {"ci_halfwidth", r.ci_halfwidth},
                                {"m_samples", r.m_samples},
                                {"grid_points", r.grid_points},
                                {"seed", r.seed}});
    }
  }
  if (IsCsv(c)) return {os.str(), std::nullopt};
  return {doc.dump(2) + "\n", std::nullopt};
}

TaskOutput Delta(Context& ctx) {
  const auto& c = ctx.config;
  try {
    CheckEpsilon(ctx.internal_rule, c.eps);
  } catch (const Error& e) {
    ThrowConfig(e.what());
  }
  const auto sol = PickRoot(ctx, SolveGamma(ctx.g()));
  const auto d = ComputeDeltaBound(ctx.g(), sol, ctx.internal_rule, c.eps);
  // Internal side k is caller side Internal(k) because the swap is an involution.
  const Player side = ctx.g().Internal(d.argmax_side);
  const double closed = d.closed_form.value_or(std::nan(""));
  if (IsCsv(c)) {
    std::ostringstream os;
    os << "delta,epsilon,method,argmax_y,argmax_battlefield,argmax_side,raw_max,closed_form\n"
       << Csv(d.delta) << ',' << Csv(d.epsilon) << ',' << DeltaMethodName(d.method) << ','
       << Csv(d.argmax_point) << ',' << d.argmax_battlefield << ',' << Label(side) << ','
       << Csv(d.raw_max) << ',' << (d.closed_form ? Csv(closed) : "") << '\n';
    return {os.str(), std::nullopt};
  }
  ordered doc;
  doc["task"] = "delta";
  doc["rule"] = ctx.rule.Describe();
  doc["delta"] = d.delta;
  doc["epsilon"] = d.epsilon;
  doc["method"] = DeltaMethodName(d.method);
  doc["argmax_y"] = d.argmax_point;
  doc["argmax_battlefield"] = d.argmax_battlefield;
  doc["argmax_side"] = Label(side);
  doc["raw_max"] = d.raw_max;
  doc["closed_form"] = d.closed_form ? ordered(closed) : ordered(nullptr);
  doc["closed_form_method"] =
      d.closed_form_method ? ordered(DeltaMethodName(*d.closed_form_method)) : ordered(nullptr);
  return {doc.dump(2) + "\n", std::nullopt};
}

ordered RecordJson(const SweepRecord& r) {
  ordered j;
  j["index"] = r.index;
  j["axis"] = SweepAxisName(r.axis);
  j["value"] = r.value;
  j["repetition"] = r.repetition;
  j["seed"] = r.seed;
  j["eps_a"] = r.eps_a;  // NaN serializes as null
  j["eps_b"] = r.eps_b;
  j["ci_a"] = r.ci_a;
  j["ci_b"] = r.ci_b;
  j["delta"] = r.delta ? ordered(*r.delta) : ordered(nullptr);
  j["ms"] = r.ms;
  j["error"] = r.error.empty() ? ordered(nullptr) : ordered(r.error);
  return j;
}

ordered SummaryJson(const SweepSummary& s) {
  ordered j;
  j["axis"] = SweepAxisName(s.axis);
  j["rows"] = ordered::array();
  for (const auto& row : s.rows) {
    j["rows"].push_back({{"value", row.value},
                         {"count", row.count},
                         {"median_eps_a", row.median_eps_a},
                         {"median_eps_b", row.median_eps_b},
                         {"median_eps", row.median_eps},
                         {"median_delta", row.median_delta ? ordered(*row.median_delta)
                                                           : ordered(nullptr)}});
  }
  j["loglog_slope"] = s.loglog_slope ? ordered(*s.loglog_slope) : ordered(nullptr);
  return j;
}

TaskOutput Sweep(const ExperimentConfig& c, const TaskOptions& options) {
  std::ofstream partial;
  if (!options.partial_path.empty()) {
    partial.open(options.partial_path, std::ios::trunc);
    if (!partial) ThrowConfig("cannot write '" + options.partial_path + "'");
  }
  SweepOptions so;
  so.threads = options.threads;
  so.timing = options.timing;
  if (partial.is_open()) {
    so.on_record = [&](const SweepRecord& r) { partial << RecordJson(r).dump() << '\n' << std::flush; };
  }
  const auto records = RunSweep(c, so);
  const auto summary = Summarize(c.axis, records);
  if (IsCsv(c)) {
    std::ostringstream os;
    os << "axis,value,seed,eps_a,eps_b,ci_a,ci_b,delta,ms\n";
    for (const auto& r : records) {
      os << SweepAxisName(r.axis) << ',' << Csv(r.value) << ',' << r.seed << ',' << Csv(r.eps_a)
         << ',' << Csv(r.eps_b) << ',' << Csv(r.ci_a) << ',' << Csv(r.ci_b) << ','
         << (r.delta ? Csv(*r.delta) : "") << ',' << Csv(r.ms) << '\n';
    }
    return {os.str(), SummaryJson(summary).dump(2) + "\n"};
  }
  ordered doc;
  doc["task"] = "sweep";
  doc["axis"] = SweepAxisName(c.axis);
  doc["records"] = ordered::array();
  for (const auto& r : records) doc["records"].push_back(RecordJson(r));
  doc["summary"] = SummaryJson(summary);
  return {doc.dump(2) + "\n", std::nullopt};
}

}  // namespace

std::optional<std::string> ConfigOutPath(const std::string& config_path) {
  const auto base = std::filesystem::path(config_path).parent_path();
  const auto config = ParseExperimentConfig(ReadTextFile(config_path), base.string());
  if (config.out.empty()) return std::nullopt;
  const std::filesystem::path out(config.out);
  if (out.is_absolute()) return config.out;
  return (base / out).string();
}

TaskOutput RunTask(const std::string& task, const std::string& config_path,
                   const TaskOptions& options) {
  const std::string text = ReadTextFile(config_path);
  const std::string base = std::filesystem::path(config_path).parent_path().string();
  ExperimentConfig config = ParseExperimentConfig(text, base);
  if (options.seed) config.seed = *options.seed;
  if (options.format) {
    if (*options.format != "json" && *options.format != "csv") {
      ThrowConfig("format must be json or csv, got '" + *options.format + "'");
    }
    config.format = *options.format;
  }
  const std::string name = task.empty() ? config.task : task;
  if (name.empty()) ThrowConfig("no task given");
  const int threads = std::max(1, options.threads);
  if (name == "sweep") {
    TaskOptions o = options;
    o.threads = threads;
    return Sweep(config, o);
  }
  if (name != "solve" && name != "sample" && name != "payoff" && name != "exploit" &&
      name != "delta") {
    ThrowConfig("unknown task '" + name + "'");
  }
  Context ctx = Prepare(std::move(config));
  if (name == "solve") return Solve(ctx);
  if (name == "sample") return Sample(ctx, threads);
  if (name == "payoff") return Payoff(ctx);
  if (name == "exploit") return Exploit(ctx, threads);
  return Delta(ctx);
}

}  // namespace blotto::internal
