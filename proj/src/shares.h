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

#ifndef BLOTTO_SRC_SHARES_H_
#define BLOTTO_SRC_SHARES_H_

#include <utility>

namespace blotto::internal {

// Winner-takes-all shares; shared by the payoff and CSF code so both paths
// produce identical bits.
inline std::pair<double, double> BlottoShares(double x, double y, double alpha) {
  if (x > y) return {1.0, 0.0};
  if (x < y) return {0.0, 1.0};
  return {alpha, 1.0 - alpha};
}

}  // namespace blotto::internal

#endif  // BLOTTO_SRC_SHARES_H_
