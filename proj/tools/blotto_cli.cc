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

// Command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "blotto/blotto_c.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

int ExitCode(blotto_status status) {
  switch (status) {
    case BLOTTO_OK:
      return kExitOk;
    case BLOTTO_ERR_INVALID_ARGUMENT:
    case BLOTTO_ERR_CONFIG:
      return kExitConfig;
    case BLOTTO_ERR_NUMERICAL:
      return kExitNumerical;
    default:
      return kExitInternal;
  }
}

int Report(blotto_status status) {
  std::cerr << "blotto: " << blotto_last_error() << "\n";
  return ExitCode(status);
}

// Owns a string handed out by the library.
struct LibString {
  char* p = nullptr;
  ~LibString() { blotto_string_free(p); }
};

// Writes through a temporary and renames, so readers never see half a file.
bool WriteFile(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f || !(f << text) || !f.flush()) return false;
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  return !ec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Independently uniform strategies for generalized Colonel Blotto games"};
  app.require_subcommand(1);

  std::string config;
  std::string out;
  std::string format;
  uint64_t seed = 0;
  int threads = 1;
  bool timing = false;
  app.add_option("--config", config, "Experiment configuration (JSON)")->required();
  auto* seed_opt = app.add_option("--seed", seed, "Root seed, overrides the configuration");
  app.add_option("--out", out, "Output file; stdout when neither this nor the config names one");
  auto* format_opt =
      app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 4096));
  app.add_flag("--timing", timing, "Sweep only: fill the ms column with wall-clock time");

  const char* tasks[][2] = {
      {"solve", "Roots of the equilibrium equation and their multipliers"},
      {"sample", "Draw pure strategies from the IU strategy"},
      {"payoff", "Payoffs of the pure profile (x_a, x_b)"},
      {"exploit", "Monte Carlo exploitability of the IU profile"},
      {"delta", "Dissimilarity bound of a lottery rule"},
      {"sweep", "Exploitability over an axis of games or rules"},
  };
  for (const auto& t : tasks) app.add_subcommand(t[0], t[1])->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }
  const std::string task = app.get_subcommands().front()->get_name();

  std::optional<std::string> out_path;
  if (!out.empty()) {
    out_path = out;
  } else {
    LibString configured;
    const blotto_status st = blotto_config_out(config.c_str(), &configured.p);
    if (st != BLOTTO_OK) return Report(st);
    if (configured.p) out_path = configured.p;
  }

  std::string partial;
  blotto_run_options opt{};
  opt.has_seed = *seed_opt ? 1 : 0;
  opt.seed = seed;
  opt.threads = threads;
  opt.format = *format_opt ? format.c_str() : nullptr;
  opt.timing = timing ? 1 : 0;
  if (task == "sweep" && out_path) {
    partial = *out_path + ".partial.jsonl";
    opt.partial_path = partial.c_str();
  }

  LibString output, summary;
  const blotto_status st = blotto_run_task(task.c_str(), config.c_str(), &opt, &output.p, &summary.p);
  if (st != BLOTTO_OK) return Report(st);

  if (!out_path) {
    std::cout << output.p;
    if (summary.p) std::cerr << summary.p;
    return std::cout.flush() ? kExitOk : kExitInternal;
  }
  if (!WriteFile(*out_path, output.p)) {
    std::cerr << "blotto: cannot write '" << *out_path << "'\n";
    return kExitConfig;
  }
  if (summary.p && !WriteFile(*out_path + ".summary.json", summary.p)) {
    std::cerr << "blotto: cannot write '" << *out_path << ".summary.json'\n";
    return kExitConfig;
  }
  // The canonical file now holds every record.
  if (!partial.empty()) std::filesystem::remove(partial);
  return kExitOk;
}
