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

#ifndef BLOTTO_BLOTTO_C_H_
#define BLOTTO_BLOTTO_C_H_

/* C interface to the blotto library. Every function returns a status code;
 * on failure a message is available from blotto_last_error() on the calling
 * thread until the next failing call. Objects are opaque handles released by
 * their *_destroy function; strings returned through char** are released
 * with blotto_string_free. Player arguments and results use the caller's
 * labels even when the game was relabeled internally. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BLOTTO_API __declspec(dllexport)
#else
#define BLOTTO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum blotto_status {
  BLOTTO_OK = 0,
  BLOTTO_ERR_INVALID_ARGUMENT = 1,
  BLOTTO_ERR_CONFIG = 2,
  BLOTTO_ERR_NUMERICAL = 3,
  BLOTTO_ERR_INTERNAL = 4
} blotto_status;

typedef enum blotto_player { BLOTTO_PLAYER_A = 0, BLOTTO_PLAYER_B = 1 } blotto_player;

typedef enum blotto_csf_kind {
  BLOTTO_CSF_BLOTTO = 0,
  BLOTTO_CSF_POWER = 1,
  BLOTTO_CSF_LOGIT = 2
} blotto_csf_kind;

typedef struct blotto_game blotto_game;
typedef struct blotto_solutions blotto_solutions;
typedef struct blotto_csf blotto_csf;

typedef struct blotto_solution_info {
  double gamma;
  double lambda_a;
  double lambda_b;
  double residual;
  size_t omega_size;
} blotto_solution_info;

typedef struct blotto_exploit_report {
  double iu_value;
  double br_value;
  double epsilon_hat;
  double ci_halfwidth;
  size_t m_samples;
  size_t grid_points;
  uint64_t seed;
} blotto_exploit_report;

typedef struct blotto_delta_report {
  double delta;
  double epsilon;
  double closed_form; /* NaN when no closed form exists for the kind */
  double argmax_point;
  size_t argmax_battlefield;
  blotto_player argmax_side;
  int grid_supremum; /* nonzero for custom rules not declared Lipschitz */
} blotto_delta_report;

typedef struct blotto_run_options {
  int has_seed; /* override the configuration's seed */
  uint64_t seed;
  int threads;        /* <= 0 means 1 */
  const char* format; /* "json" or "csv"; NULL keeps the configuration's */
  const char* partial_path; /* sweep only: incremental records, may be NULL */
  int timing;               /* sweep only: record wall-clock milliseconds */
} blotto_run_options;

BLOTTO_API const char* blotto_last_error(void);
BLOTTO_API const char* blotto_version(void);
BLOTTO_API void blotto_string_free(char* s);

/* Games. */
BLOTTO_API blotto_status blotto_game_create(size_t n, double budget_a, double budget_b,
                                            const double* values_a, const double* values_b,
                                            double alpha, blotto_game** out);
BLOTTO_API blotto_status blotto_game_from_json(const char* text, blotto_game** out);
BLOTTO_API void blotto_game_destroy(blotto_game* game);
BLOTTO_API size_t blotto_game_size(const blotto_game* game);
BLOTTO_API int blotto_game_relabeled(const blotto_game* game);

/* Roots of the equilibrium equation, ascending, in internal labels. */
BLOTTO_API blotto_status blotto_solve(const blotto_game* game, blotto_solutions** out);
BLOTTO_API void blotto_solutions_destroy(blotto_solutions* solutions);
BLOTTO_API size_t blotto_solutions_count(const blotto_solutions* solutions);
BLOTTO_API blotto_status blotto_solutions_get(const blotto_solutions* solutions, size_t index,
                                              blotto_solution_info* info);
/* Copies up to `capacity` indices of Omega_A into `indices`. */
BLOTTO_API blotto_status blotto_solutions_omega(const blotto_solutions* solutions, size_t index,
                                                size_t* indices, size_t capacity);

/* Contest success functions. */
BLOTTO_API blotto_status blotto_csf_create(blotto_csf_kind kind, double r, double alpha,
                                           blotto_csf** out);
/* zeta_a(x, y, user) must be a valid CSF share for player A. */
BLOTTO_API blotto_status blotto_csf_create_custom(double (*zeta_a)(double x, double y, void* user),
                                                  void* user, double alpha, int lipschitz,
                                                  blotto_csf** out);
BLOTTO_API void blotto_csf_destroy(blotto_csf* csf);
BLOTTO_API blotto_status blotto_csf_evaluate(const blotto_csf* csf, double x, double y,
                                             double* zeta_a, double* zeta_b);

/* Payoffs of a pure profile; csf == NULL selects the winner-takes-all rule. */
BLOTTO_API blotto_status blotto_payoff(const blotto_game* game, const blotto_csf* csf,
                                       const double* x_a, const double* x_b, double* pi_a,
                                       double* pi_b);

/* Draws `m` IU allocations of `player` for root `root` into out[m * n]. */
BLOTTO_API blotto_status blotto_sample(const blotto_game* game, const blotto_solutions* solutions,
                                       size_t root, blotto_player player, size_t m, uint64_t seed,
                                       int threads, double* out);

BLOTTO_API blotto_status blotto_exploitability(const blotto_game* game,
                                               const blotto_solutions* solutions, size_t root,
                                               const blotto_csf* csf, size_t m_samples,
                                               size_t grid_points, uint64_t seed, int threads,
                                               blotto_exploit_report* report_a,
                                               blotto_exploit_report* report_b);

BLOTTO_API blotto_status blotto_delta(const blotto_game* game, const blotto_solutions* solutions,
                                      size_t root, const blotto_csf* csf, double eps,
                                      blotto_delta_report* report);

/* Runs one configuration-driven task ("solve", "sample", "payoff", "exploit",
 * "delta" or "sweep") read from `config_path`. The main document is returned
 * in *output; *summary receives the sweep summary in CSV mode and is NULL
 * otherwise. */
BLOTTO_API blotto_status blotto_run_task(const char* task, const char* config_path,
                                         const blotto_run_options* options, char** output,
                                         char** summary);

/* The output path named by the configuration's "out" key, resolved against
 * the configuration's directory; *out_path is NULL when the key is absent. */
BLOTTO_API blotto_status blotto_config_out(const char* config_path, char** out_path);

#ifdef __cplusplus
}
#endif

#endif /* BLOTTO_BLOTTO_C_H_ */
