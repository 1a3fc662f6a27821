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

#ifndef BLOTTO_ERROR_H_
#define BLOTTO_ERROR_H_

#include <stdexcept>
#include <string>

namespace blotto {

enum class ErrorKind {
  kInvalidArgument,  // bad caller input: malformed game, infeasible allocation
  kConfig,           // unreadable or inconsistent configuration
  kNumerical,        // a numerical routine failed an internal check
};

// All library failures are reported as blotto::Error; the C API maps the
// kind onto its status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void ThrowInvalid(const std::string& what) {
  throw Error(ErrorKind::kInvalidArgument, what);
}
[[noreturn]] inline void ThrowConfig(const std::string& what) {
  throw Error(ErrorKind::kConfig, what);
}
[[noreturn]] inline void ThrowNumerical(const std::string& what) {
  throw Error(ErrorKind::kNumerical, what);
}

}  // namespace blotto

#endif  // BLOTTO_ERROR_H_
