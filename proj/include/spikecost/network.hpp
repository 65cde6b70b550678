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
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace spikecost {

/// Geometry and bit widths of one convolution layer. Defaults describe a
/// 512x14x14 input with 3x3 kernels, stride 1 and no padding.
struct ConvShape {
  std::uint32_t ci = 512;
  std::uint32_t hi = 14;
  std::uint32_t wi = 14;
  std::uint32_t co = 512;
  std::uint32_t hk = 3;
  std::uint32_t wk = 3;
  std::uint32_t stride = 1;
  std::uint32_t padding = 0;
  unsigned act_bits = 8;
  unsigned weight_bits = 8;
  unsigned state_bits = 8;

  /// Throws ConfigError when any extent is zero or the window does not tile
  /// the padded input exactly.
  void validate() const;

  bool operator==(const ConvShape&) const = default;
};

struct OutputDims {
  std::uint32_t co = 0;
  std::uint32_t ho = 0;
  std::uint32_t wo = 0;

  bool operator==(const OutputDims&) const = default;
};

OutputDims conv_output_dims(const ConvShape& shape);

/// Reads per output element: ci * hk * wk.
std::uint64_t n_rd(const ConvShape& shape);

/// Number of output elements, co * ho * wo.
std::uint64_t output_count(const ConvShape& shape);

/// A fully connected recurrent layer: every neuron sees `n_in` inputs.
struct RecurrentShape {
  std::uint32_t n_in = 1024;
  std::uint32_t n_neurons = 512;
  unsigned act_bits = 8;
  unsigned weight_bits = 8;
  unsigned state_bits = 8;

  void validate() const;

  bool operator==(const RecurrentShape&) const = default;
};

enum class ResetMode {
  immediate_subtract,  // subtract theta in the same step the neuron fires
  deferred_subtract,   // subtract theta * S[t-1] at the start of the next step
};

struct NeuronParams {
  double beta = 0.5;
  std::int32_t theta = 64;
  ResetMode reset_mode = ResetMode::immediate_subtract;

  void validate() const;
};

enum class SparsityMode {
  paper_faithful,  // every component scales with gamma
  component_wise,  // only read and accumulate terms scale with gamma
};

struct SparsitySpec {
  double gamma = 1.0;
  SparsityMode mode = SparsityMode::paper_faithful;
  std::uint64_t seed = 42;

  void validate() const;
};

using LayerSpec = std::variant<ConvShape, RecurrentShape>;

/// Copy of `shape` with activations narrowed to 1-bit spikes.
ConvShape snn_variant(ConvShape shape);
RecurrentShape snn_variant(RecurrentShape shape);
/// Copy with at least 8-bit activations (keeps wider widths).
ConvShape ann_variant(ConvShape shape);
RecurrentShape ann_variant(RecurrentShape shape);

std::string_view to_string(ResetMode m);
std::string_view to_string(SparsityMode m);
ResetMode parse_reset_mode(std::string_view s);
/// Accepts "paper", "paper_faithful", "component", "component_wise".
SparsityMode parse_sparsity_mode(std::string_view s);

ConvShape conv_shape_from_json(const nlohmann::json& j);
RecurrentShape recurrent_shape_from_json(const nlohmann::json& j);
NeuronParams neuron_params_from_json(const nlohmann::json& j);

/// A layer file holds `{"conv": {...}}`, `{"recurrent": {...}}` or
/// `{"layers": [ ... ]}`, optionally with a `"neuron"` block.
struct LayerFile {
  std::vector<LayerSpec> layers;
  NeuronParams neuron;
};

LayerFile layer_file_from_json(const nlohmann::json& j);
LayerFile load_layer_file(const std::string& path);

/// Inline form: `conv`, `recurrent`, `conv:CI,HI,WI,CO,HK,WK[,S[,P]]` or
/// `rec:N_IN,N_NEURONS`.
LayerSpec parse_inline_layer(std::string_view text);

}  // namespace spikecost
