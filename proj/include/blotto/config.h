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

#ifndef BLOTTO_CONFIG_H_
#define BLOTTO_CONFIG_H_

#include <string>

#include "blotto/experiments.h"
#include "blotto/game.h"

namespace blotto {

// Game document:
//   {"n": 3, "budget_a": 1, "budget_b": 2,
//    "values_a": [1, 1, 1], "values_b": [1, 1, 1], "alpha": 0.5}
// "n" and "alpha" are optional (n defaults to the length of values_a, alpha
// to 0.5). Errors throw Error(kConfig) naming the key and its line.
GameSpec ParseGameJson(const std::string& text);

// Experiment document, see README.md for the keys. Relative game file paths
// are resolved against `base_dir`.
ExperimentConfig ParseExperimentConfig(const std::string& text, const std::string& base_dir);

// Reads a whole file; throws Error(kConfig) if it cannot be opened.
std::string ReadTextFile(const std::string& path);

}  // namespace blotto

#endif  // BLOTTO_CONFIG_H_
