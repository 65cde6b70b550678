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

#include "spikecost/lif.hpp"

#include <cmath>
#include <cstdlib>

#include "spikecost/error.hpp"

namespace spikecost {

std::int32_t beta_q8(double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) throw ConfigError("beta must be in [0, 1]");
  return static_cast<std::int32_t>(std::lround(beta * 256.0));
}

std::int32_t decay(std::int32_t v, std::int32_t beta_q) {
  const std::int64_t p = std::int64_t{v} * beta_q;
  const std::int64_t mag = (std::llabs(p) + 128) >> 8;
  return static_cast<std::int32_t>(p < 0 ? -mag : mag);
}

std::int8_t saturate_int8(std::int64_t v) {
  if (v > 127) return 127;
  if (v < -128) return -128;
  return static_cast<std::int8_t>(v);
}

NeuronUpdate lif_update(std::int8_t v, bool prev_spike, std::int64_t current,
                        const NeuronParams& params, std::int32_t beta_q) {
  NeuronUpdate u;
  std::int64_t m = std::int64_t{decay(v, beta_q)} + current;
  if (params.reset_mode == ResetMode::immediate_subtract) {
    const std::int8_t sat = saturate_int8(m);
    u.spike = sat >= params.theta;
    u.subtracted = u.spike;
    u.stored = u.spike ? saturate_int8(std::int64_t{sat} - params.theta) : sat;
  } else {
    if (prev_spike) {
      m -= params.theta;
      u.subtracted = true;
    }
    u.stored = saturate_int8(m);
    u.spike = u.stored >= params.theta;
  }
  return u;
}

LifState::LifState(std::size_t n, const NeuronParams& p) : v(n, 0), prev_spike(n, 0), params(p) {
  params.validate();
}

std::vector<std::uint8_t> lif_step(LifState& state, std::span<const std::int32_t> currents) {
  if (currents.size() != state.size()) throw ConfigError("current vector size mismatch");
  const auto bq = beta_q8(state.params.beta);
  std::vector<std::uint8_t> spikes(state.size());
  for (std::size_t i = 0; i < state.size(); ++i) {
    const auto u = lif_update(state.v[i], state.prev_spike[i] != 0, currents[i], state.params, bq);
    state.v[i] = u.stored;
    state.prev_spike[i] = u.spike;
    spikes[i] = u.spike;
  }
  return spikes;
}

}  // namespace spikecost
