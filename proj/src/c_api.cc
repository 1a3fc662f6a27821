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

#include "blotto/blotto_c.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "blotto/best_response.h"
#include "blotto/config.h"
#include "blotto/csf.h"
#include "blotto/csf_analysis.h"
#include "blotto/error.h"
#include "blotto/game.h"
#include "blotto/gamma_solver.h"
#include "blotto/iu_strategy.h"
#include "tasks.h"

struct blotto_game {
  blotto::ValidatedGame game;
};

struct blotto_solutions {
  std::size_t n;
  std::vector<blotto::GammaSolution> roots;
};

struct blotto_csf {
  blotto::ContestSuccessFunction csf;  // caller labels
};

namespace {

using blotto::Error;
using blotto::ErrorKind;
using blotto::Player;

thread_local std::string last_error;

blotto_status Fail(blotto_status status, const std::string& what) {
  last_error = what;
  return status;
}

template <class Fn>
blotto_status Guard(Fn&& fn) {
  try {
    fn();
    return BLOTTO_OK;
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::kInvalidArgument:
        return Fail(BLOTTO_ERR_INVALID_ARGUMENT, e.what());
      case ErrorKind::kConfig:
        return Fail(BLOTTO_ERR_CONFIG, e.what());
      case ErrorKind::kNumerical:
        return Fail(BLOTTO_ERR_NUMERICAL, e.what());
    }
    return Fail(BLOTTO_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(BLOTTO_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(BLOTTO_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(BLOTTO_ERR_INTERNAL, "unknown exception");
  }
}

void Require(bool ok, const char* what) {
  if (!ok) blotto::ThrowInvalid(what);
}

Player ToPlayer(blotto_player p) {
  Require(p == BLOTTO_PLAYER_A || p == BLOTTO_PLAYER_B, "player must be A or B");
  return p == BLOTTO_PLAYER_A ? Player::kA : Player::kB;
}

blotto_player FromPlayer(Player p) { return p == Player::kA ? BLOTTO_PLAYER_A : BLOTTO_PLAYER_B; }

const blotto::GammaSolution& Root(const blotto_game* game, const blotto_solutions* s, std::size_t root) {
  Require(game && s, "null handle");
  Require(s->n == game->game.n(), "solutions belong to a different game");
  Require(root < s->roots.size(), "root index out of range");
  return s->roots[root];
}

// The rule in internal labels; NULL means winner-takes-all with the game's
// own tie share.
blotto::ContestSuccessFunction InternalRule(const blotto::ValidatedGame& g, const blotto_csf* csf) {
  if (!csf) return blotto::ContestSuccessFunction::Blotto(g.alpha());
  return g.relabeled() ? csf->csf.Swapped() : csf->csf;
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void FillReport(const blotto::ExploitabilityReport& r, blotto_exploit_report* out) {
  out->iu_value = r.iu_value;
  out->br_value = r.br_value;
  out->epsilon_hat = r.epsilon_hat;
  out->ci_halfwidth = r.ci_halfwidth;
  out->m_samples = r.m_samples;
  out->grid_points = r.grid_points;
  out->seed = r.seed;
}

}  // namespace

extern "C" {

const char* blotto_last_error(void) { return last_error.c_str(); }

const char* blotto_version(void) { return BLOTTO_VERSION; }

void blotto_string_free(char* s) { std::free(s); }

blotto_status blotto_game_create(size_t n, double budget_a, double budget_b, const double* values_a,
                                 const double* values_b, double alpha, blotto_game** out) {
  return Guard([&] {
    Require(out != nullptr, "null output pointer");
    Require(n == 0 || (values_a && values_b), "null value array");
    blotto::GameSpec spec;
    spec.n = n;
    spec.budget_a = budget_a;
    spec.budget_b = budget_b;
    spec.values_a.assign(values_a, values_a + n);
    spec.values_b.assign(values_b, values_b + n);
    spec.alpha = alpha;
    *out = new blotto_game{blotto::ValidatedGame::Validate(spec)};
  });
}

blotto_status blotto_game_from_json(const char* text, blotto_game** out) {
  return Guard([&] {
    Require(text && out, "null argument");
    *out = new blotto_game{blotto::ValidatedGame::Validate(blotto::ParseGameJson(text))};
  });
}

void blotto_game_destroy(blotto_game* game) { delete game; }

size_t blotto_game_size(const blotto_game* game) { return game ? game->game.n() : 0; }

int blotto_game_relabeled(const blotto_game* game) { return game && game->game.relabeled() ? 1 : 0; }

blotto_status blotto_solve(const blotto_game* game, blotto_solutions** out) {
  return Guard([&] {
    Require(game && out, "null argument");
    *out = new blotto_solutions{game->game.n(), blotto::SolveGamma(game->game)};
  });
}

void blotto_solutions_destroy(blotto_solutions* solutions) { delete solutions; }

size_t blotto_solutions_count(const blotto_solutions* solutions) {
  return solutions ? solutions->roots.size() : 0;
}

blotto_status blotto_solutions_get(const blotto_solutions* solutions, size_t index,
                                   blotto_solution_info* info) {
  return Guard([&] {
    Require(solutions && info, "null argument");
    Require(index < solutions->roots.size(), "root index out of range");
    const auto& r = solutions->roots[index];
    *info = {r.gamma, r.lambda_a, r.lambda_b, r.residual, r.omega_a.size()};
  });
}

blotto_status blotto_solutions_omega(const blotto_solutions* solutions, size_t index,
                                     size_t* indices, size_t capacity) {
  return Guard([&] {
    Require(solutions != nullptr, "null argument");
    Require(index < solutions->roots.size(), "root index out of range");
    const auto& omega = solutions->roots[index].omega_a;
    Require(capacity == 0 || indices, "null index buffer");
    for (std::size_t k = 0; k < omega.size() && k < capacity; ++k) indices[k] = omega[k];
  });
}

blotto_status blotto_csf_create(blotto_csf_kind kind, double r, double alpha, blotto_csf** out) {
  return Guard([&] {
    Require(out != nullptr, "null output pointer");
    switch (kind) {
      case BLOTTO_CSF_BLOTTO:
        *out = new blotto_csf{blotto::ContestSuccessFunction::Blotto(alpha)};
        return;
      case BLOTTO_CSF_POWER:
        *out = new blotto_csf{blotto::ContestSuccessFunction::Power(r, alpha)};
        return;
      case BLOTTO_CSF_LOGIT:
        *out = new blotto_csf{blotto::ContestSuccessFunction::Logit(r, alpha)};
        return;
    }
    blotto::ThrowInvalid("unknown CSF kind");
  });
}

blotto_status blotto_csf_create_custom(double (*zeta_a)(double x, double y, void* user), void* user,
                                       double alpha, int lipschitz, blotto_csf** out) {
  return Guard([&] {
    Require(zeta_a && out, "null argument");
    auto fn = [zeta_a, user](double x, double y) { return zeta_a(x, y, user); };
    *out = new blotto_csf{blotto::ContestSuccessFunction::Custom(fn, alpha, lipschitz != 0)};
  });
}

void blotto_csf_destroy(blotto_csf* csf) { delete csf; }

blotto_status blotto_csf_evaluate(const blotto_csf* csf, double x, double y, double* zeta_a,
                                  double* zeta_b) {
  return Guard([&] {
    Require(csf && zeta_a && zeta_b, "null argument");
    const auto [a, b] = csf->csf.Evaluate(x, y);
    *zeta_a = a;
    *zeta_b = b;
  });
}

blotto_status blotto_payoff(const blotto_game* game, const blotto_csf* csf, const double* x_a,
                            const double* x_b, double* pi_a, double* pi_b) {
  return Guard([&] {
    Require(game && x_a && x_b && pi_a && pi_b, "null argument");
    const auto& g = game->game;
    const std::size_t n = g.n();
    blotto::Allocation a(std::vector<double>(x_a, x_a + n));
    blotto::Allocation b(std::vector<double>(x_b, x_b + n));
    if (g.relabeled()) std::swap(a, b);
    auto [pa, pb] = csf ? blotto::CsfPayoff(g, InternalRule(g, csf), a, b) : blotto::BlottoPayoff(g, a, b);
    if (g.relabeled()) std::swap(pa, pb);
    *pi_a = pa;
    *pi_b = pb;
  });
}

blotto_status blotto_sample(const blotto_game* game, const blotto_solutions* solutions, size_t root,
                            blotto_player player, size_t m, uint64_t seed, int threads, double* out) {
  return Guard([&] {
    const auto& sol = Root(game, solutions, root);
    Require(out != nullptr, "null output buffer");
    const blotto::IUSampler sampler(game->game, sol);
    const auto batch = blotto::DrawBatch(sampler, game->game.Internal(ToPlayer(player)), m,
                                         blotto::RandomStream(seed), threads, true);
    const std::size_t n = game->game.n();
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < n; ++i) out[j * n + i] = batch.draws[j][i];
    }
  });
}

blotto_status blotto_exploitability(const blotto_game* game, const blotto_solutions* solutions,
                                    size_t root, const blotto_csf* csf, size_t m_samples,
                                    size_t grid_points, uint64_t seed, int threads,
                                    blotto_exploit_report* report_a, blotto_exploit_report* report_b) {
  return Guard([&] {
    const auto& sol = Root(game, solutions, root);
    Require(report_a && report_b, "null report");
    const auto& g = game->game;
    blotto::ExploitabilityOptions opt;
    opt.m_samples = m_samples;
    opt.grid_points = grid_points;
    opt.seed = seed;
    opt.threads = threads;
    const auto reports = blotto::EstimateExploitability(g, sol, InternalRule(g, csf), opt);
    FillReport(reports[static_cast<int>(g.Internal(Player::kA))], report_a);
    FillReport(reports[static_cast<int>(g.Internal(Player::kB))], report_b);
  });
}

blotto_status blotto_delta(const blotto_game* game, const blotto_solutions* solutions, size_t root,
                           const blotto_csf* csf, double eps, blotto_delta_report* report) {
  return Guard([&] {
    const auto& sol = Root(game, solutions, root);
    Require(csf && report, "null argument");
    const auto& g = game->game;
    const auto d = blotto::ComputeDeltaBound(g, sol, InternalRule(g, csf), eps);
    report->delta = d.delta;
    report->epsilon = d.epsilon;
    report->closed_form = d.closed_form.value_or(std::nan(""));
    report->argmax_point = d.argmax_point;
    report->argmax_battlefield = d.argmax_battlefield;
    report->argmax_side = FromPlayer(g.Internal(d.argmax_side));
    report->grid_supremum = d.grid_supremum ? 1 : 0;
  });
}

blotto_status blotto_run_task(const char* task, const char* config_path,
                              const blotto_run_options* options, char** output, char** summary) {
  return Guard([&] {
    Require(config_path && output, "null argument");
    *output = nullptr;
    if (summary) *summary = nullptr;
    blotto::internal::TaskOptions opt;
    if (options) {
      if (options->has_seed) opt.seed = options->seed;
      opt.threads = options->threads;
      if (options->format) opt.format = options->format;
      if (options->partial_path) opt.partial_path = options->partial_path;
      opt.timing = options->timing != 0;
    }
    const auto result = blotto::internal::RunTask(task ? task : "", config_path, opt);
    char* out = Dup(result.output);
    if (summary && result.summary) {
      try {
        *summary = Dup(*result.summary);
      } catch (...) {
        std::free(out);
        throw;
      }
    }
    *output = out;
  });
}

blotto_status blotto_config_out(const char* config_path, char** out_path) {
  return Guard([&] {
    Require(config_path && out_path, "null argument");
    *out_path = nullptr;
    const auto path = blotto::internal::ConfigOutPath(config_path);
    if (path) *out_path = Dup(*path);
  });
}

}  // extern "C"
