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

#ifndef BLOTTO_SRC_TASKS_H_
#define BLOTTO_SRC_TASKS_H_

#include <cstdint>
#include <optional>
#include <string>

namespace blotto::internal {

struct TaskOptions {
  std::optional<uint64_t> seed;
  int threads = 1;
  std::optional<std::string> format;
  std::string partial_path;  // sweep only, empty for none
  bool timing = false;
};

struct TaskOutput {
  std::string output;
  std::optional<std::string> summary;  // sweep in CSV mode
};

// Runs `task` (or the config's own task when empty) from the config file.
TaskOutput RunTask(const std::string& task, const std::string& config_path,
                   const TaskOptions& options);

// The config's "out" path resolved against its directory, if any.
std::optional<std::string> ConfigOutPath(const std::string& config_path);

}  // namespace blotto::internal

#endif  // BLOTTO_SRC_TASKS_H_
