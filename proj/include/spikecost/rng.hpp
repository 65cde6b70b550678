// Copyright 2026 The spikecost Authors
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

#pragma once

#include <array>
#include <cstdint>

namespace spikecost {

/// xoshiro256** 1.0 (Blackman & Vigna), state seeded by four successive
/// splitmix64 outputs of the user seed. Streams are identical on every
/// platform, which the reproducibility guarantees of the simulator rely on.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed);

  std::uint64_t next();

  /// Uniform double in [0, 1) built from the top 53 bits.
  double uniform();

  /// True with probability p (u < p), so p == 1 always fires.
  bool bernoulli(double p) { return uniform() < p; }

  /// Uniform integer in [lo, hi] by rejection, free of modulo bias.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

 private:
  std::array<std::uint64_t, 4> s_{};
};

}  // namespace spikecost

namespace spikecost {

/// Independent stream seed for (base seed, stream id), via splitmix64.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace spikecost
