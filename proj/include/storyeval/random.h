// Copyright 2026 The storyeval Authors.
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

// Seeded random streams. All variates are derived from std::mt19937_64 raw
// output with explicit transforms (no std::*_distribution), so a seed gives
// the same numbers with every standard library.

#ifndef STORYEVAL_RANDOM_H_
#define STORYEVAL_RANDOM_H_

#include <cstdint>
#include <random>

namespace storyeval {

// SplitMix64 finalizer; a bijection on 64-bit integers.
uint64_t SplitMix64(uint64_t x);

// Seed for an independent stream `stream` under a master `seed`. Streams
// are derived, never shared, so parallel consumers stay reproducible.
uint64_t StreamSeed(uint64_t seed, uint64_t stream);

class RandomStream {
 public:
  explicit RandomStream(uint64_t seed) : engine_(seed) {}

  // Uniform on the open interval (0, 1), 53-bit resolution.
  double UniformOpen();
  // Unit-rate exponential.
  double Exponential();
  // Standard normal (Box-Muller, cosine branch).
  double Normal();

 private:
  std::mt19937_64 engine_;
};

}  // namespace storyeval

#endif  // STORYEVAL_RANDOM_H_
