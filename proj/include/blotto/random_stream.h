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

#ifndef BLOTTO_RANDOM_STREAM_H_
#define BLOTTO_RANDOM_STREAM_H_

#include <cstdint>

namespace blotto {

// Counter-based random stream. Output number k of the stream identified by
// (seed, stream_id) is a pure function of the triple, so results do not
// depend on platform, thread count, or the order in which streams are used.
// The mixing function is the SplitMix64 finalizer.
class RandomStream {
 public:
  RandomStream(uint64_t seed, uint64_t stream_id = 0)
      : seed_(seed), stream_id_(stream_id), counter_(0) {}

  // Child stream `child`; children of distinct indices are independent.
  RandomStream Split(uint64_t child) const {
    return RandomStream(seed_, Mix(stream_id_ ^ Mix(child + 0x632be59bd9b4e019ULL)));
  }

  uint64_t NextU64() { return At(counter_++); }

  // Uniform double in [0, 1) with 53 random bits.
  double NextUniform() { return static_cast<double>(NextU64() >> 11) * 0x1.0p-53; }

  // Uniform double in [lo, hi).
  double Uniform(double lo, double hi) { return lo + (hi - lo) * NextUniform(); }

  // Uniform integer in [lo, hi] (inclusive); modulo bias is negligible for
  // the small ranges used here.
  int64_t UniformInt(int64_t lo, int64_t hi) {
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int64_t>(NextU64() % span);
  }

  uint64_t seed() const { return seed_; }
  uint64_t stream_id() const { return stream_id_; }
  uint64_t counter() const { return counter_; }

  static uint64_t Mix(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Derives a 64-bit seed from a root seed and two indices.
  static uint64_t Derive(uint64_t root, uint64_t a, uint64_t b) {
    return Mix(Mix(Mix(root) ^ (a + 0x9e3779b97f4a7c15ULL)) ^ (b + 0xd1b54a32d192ed03ULL));
  }

 private:
  uint64_t At(uint64_t index) const {
    return Mix(Mix(seed_ ^ Mix(stream_id_)) ^ (index * 0xd1b54a32d192ed03ULL));
  }

  uint64_t seed_;
  uint64_t stream_id_;
  uint64_t counter_;
};

}  // namespace blotto

#endif  // BLOTTO_RANDOM_STREAM_H_
