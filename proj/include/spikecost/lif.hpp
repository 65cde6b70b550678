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

#include <cstdint>
#include <span>
#include <vector>

#include "spikecost/network.hpp"

namespace spikecost {

/// beta as an unsigned Q8 fraction, round(beta * 256), so beta = 1 maps to 256.
std::int32_t beta_q8(double beta);

/// round-half-away-from-zero(v * beta_q / 256).
std::int32_t decay(std::int32_t v, std::int32_t beta_q);

std::int8_t saturate_int8(std::int64_t v);

struct NeuronUpdate {
  std::int8_t stored = 0;   // value written back to the state memory
  bool spike = false;
  bool subtracted = false;  // a threshold subtraction was performed this step
};

/// One discrete LIF update of a single neuron with 8-bit saturating state.
///
/// immediate_subtract: m = sat(decay(v) + I); fire iff m >= theta; on fire the
/// stored value is m - theta.
/// deferred_subtract: m = sat(decay(v) + I - theta * prev_spike), stored as is;
/// fire iff m >= theta. The subtraction is applied one step late and is not
/// decayed.
NeuronUpdate lif_update(std::int8_t v, bool prev_spike, std::int64_t current,
                        const NeuronParams& params, std::int32_t beta_q);

/// Membrane state of a population of neurons sharing one parameter set.
struct LifState {
  std::vector<std::int8_t> v;
  std::vector<std::uint8_t> prev_spike;
  NeuronParams params;

  LifState() = default;
  LifState(std::size_t n, const NeuronParams& p);
  std::size_t size() const { return v.size(); }
};

/// Advances every neuron by one step and returns the spike vector.
std::vector<std::uint8_t> lif_step(LifState& state, std::span<const std::int32_t> currents);

}  // namespace spikecost
