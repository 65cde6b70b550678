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

#include "spikecost/network.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>

#include "spikecost/error.hpp"

namespace spikecost {

namespace {

std::uint32_t output_extent(std::uint32_t in, std::uint32_t pad, std::uint32_t k,
                            std::uint32_t stride, const char* axis) {
  const std::uint64_t padded = std::uint64_t{in} + 2ull * pad;
  if (k > padded) {
    throw ConfigError(std::string("kernel larger than padded input along ") + axis);
  }
  if ((padded - k) % stride != 0) {
    throw ConfigError(std::string("non-integer output dimension along ") + axis);
  }
  return static_cast<std::uint32_t>((padded - k) / stride + 1);
}

void check_bits(unsigned bits, const char* name) {
  if (bits < 1 || bits > 32) throw ConfigError(std::string(name) + " must be in [1, 32]");
}

template <typename T>
void read_field(const nlohmann::json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    const auto& v = j.at(key);
    if constexpr (std::is_integral_v<T>) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
          v.get<std::int64_t>() > std::numeric_limits<T>::max()) {
        throw ConfigError(std::string(key) + " must be a non-negative integer");
      }
    }
    out = v.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string(key) + ": " + e.what());
  }
}

}  // namespace

void ConvShape::validate() const {
  if (ci == 0 || hi == 0 || wi == 0 || co == 0 || hk == 0 || wk == 0) {
    throw ConfigError("conv extents must all be >= 1");
  }
  if (stride == 0) throw ConfigError("stride must be >= 1");
  check_bits(act_bits, "act_bits");
  check_bits(weight_bits, "weight_bits");
  check_bits(state_bits, "state_bits");
  output_extent(hi, padding, hk, stride, "height");
  output_extent(wi, padding, wk, stride, "width");
}

OutputDims conv_output_dims(const ConvShape& shape) {
  shape.validate();
  return {shape.co, output_extent(shape.hi, shape.padding, shape.hk, shape.stride, "height"),
          output_extent(shape.wi, shape.padding, shape.wk, shape.stride, "width")};
}

std::uint64_t n_rd(const ConvShape& shape) {
  return std::uint64_t{shape.ci} * shape.hk * shape.wk;
}

std::uint64_t output_count(const ConvShape& shape) {
  const auto d = conv_output_dims(shape);
  const std::uint64_t plane = std::uint64_t{d.ho} * d.wo;
  if (plane != 0 && d.co > std::numeric_limits<std::uint64_t>::max() / plane) {
    throw ComputeError("output element count overflows 64 bits");
  }
  return plane * d.co;
}

void RecurrentShape::validate() const {
  if (n_in < 1) throw ConfigError("n_in must be >= 1");
  if (n_neurons < 1) throw ConfigError("n_neurons must be >= 1");
  check_bits(act_bits, "act_bits");
  check_bits(weight_bits, "weight_bits");
  check_bits(state_bits, "state_bits");
}

void NeuronParams::validate() const {
  if (!(beta >= 0.0 && beta <= 1.0)) throw ConfigError("beta must be in [0, 1]");
  if (theta <= 0) throw ConfigError("theta must be > 0");
}

void SparsitySpec::validate() const {
  if (!(gamma > 0.0 && gamma <= 1.0)) throw ConfigError("gamma must be in (0, 1]");
}

ConvShape snn_variant(ConvShape shape) {
  shape.act_bits = 1;
  return shape;
}
RecurrentShape snn_variant(RecurrentShape shape) {
  shape.act_bits = 1;
  return shape;
}
ConvShape ann_variant(ConvShape shape) {
  if (shape.act_bits < 8) shape.act_bits = 8;
  return shape;
}
RecurrentShape ann_variant(RecurrentShape shape) {
  if (shape.act_bits < 8) shape.act_bits = 8;
  return shape;
}

std::string_view to_string(ResetMode m) {
  return m == ResetMode::immediate_subtract ? "immediate_subtract" : "deferred_subtract";
}

std::string_view to_string(SparsityMode m) {
  return m == SparsityMode::paper_faithful ? "paper_faithful" : "component_wise";
}

ResetMode parse_reset_mode(std::string_view s) {
  if (s == "immediate_subtract") return ResetMode::immediate_subtract;
  if (s == "deferred_subtract") return ResetMode::deferred_subtract;
  throw ConfigError("unknown reset_mode '" + std::string(s) + "'");
}

SparsityMode parse_sparsity_mode(std::string_view s) {
  if (s == "paper" || s == "paper_faithful") return SparsityMode::paper_faithful;
  if (s == "component" || s == "component_wise") return SparsityMode::component_wise;
  throw ConfigError("unknown sparsity mode '" + std::string(s) + "'");
}

ConvShape conv_shape_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("conv layer must be an object");
  ConvShape s;
  read_field(j, "ci", s.ci);
  read_field(j, "hi", s.hi);
  read_field(j, "wi", s.wi);
  read_field(j, "co", s.co);
  read_field(j, "hk", s.hk);
  read_field(j, "wk", s.wk);
  read_field(j, "stride", s.stride);
  read_field(j, "padding", s.padding);
  read_field(j, "act_bits", s.act_bits);
  read_field(j, "weight_bits", s.weight_bits);
  read_field(j, "state_bits", s.state_bits);
  s.validate();
  return s;
}

RecurrentShape recurrent_shape_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("recurrent layer must be an object");
  RecurrentShape s;
  read_field(j, "n_in", s.n_in);
  read_field(j, "n_neurons", s.n_neurons);
  read_field(j, "act_bits", s.act_bits);
  read_field(j, "weight_bits", s.weight_bits);
  read_field(j, "state_bits", s.state_bits);
  s.validate();
  return s;
}

NeuronParams neuron_params_from_json(const nlohmann::json& j) {
  NeuronParams p;
  try {
    if (j.contains("beta")) p.beta = j.at("beta").get<double>();
    if (j.contains("theta")) p.theta = j.at("theta").get<std::int32_t>();
    if (j.contains("reset_mode")) {
      p.reset_mode = parse_reset_mode(j.at("reset_mode").get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("neuron: ") + e.what());
  }
  p.validate();
  return p;
}

namespace {

LayerSpec layer_from_json(const nlohmann::json& j) {
  if (j.contains("conv")) return conv_shape_from_json(j.at("conv"));
  if (j.contains("recurrent")) return recurrent_shape_from_json(j.at("recurrent"));
  throw ConfigError("layer needs a 'conv' or 'recurrent' block");
}

}  // namespace

LayerFile layer_file_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("layer file must be a JSON object");
  LayerFile f;
  if (j.contains("layers")) {
    if (!j.at("layers").is_array()) throw ConfigError("'layers' must be an array");
    for (const auto& item : j.at("layers")) f.layers.push_back(layer_from_json(item));
  } else {
    f.layers.push_back(layer_from_json(j));
  }
  if (j.contains("neuron")) f.neuron = neuron_params_from_json(j.at("neuron"));
  return f;
}

LayerFile load_layer_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open layer file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("layer file '" + path + "': " + e.what());
  }
  return layer_file_from_json(j);
}

LayerSpec parse_inline_layer(std::string_view text) {
  if (text == "conv") return ConvShape{};
  if (text == "recurrent" || text == "rec") return RecurrentShape{};

  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ConfigError("cannot parse layer '" + std::string(text) + "'");
  }
  const auto kind = text.substr(0, colon);
  std::vector<std::uint32_t> values;
  auto rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto tok = rest.substr(0, comma);
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw ConfigError("bad layer dimension '" + std::string(tok) + "'");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }

  if (kind == "conv") {
    if (values.size() < 6 || values.size() > 8) {
      throw ConfigError("conv layer needs CI,HI,WI,CO,HK,WK[,S[,P]]");
    }
    ConvShape s;
    s.ci = values[0];
    s.hi = values[1];
    s.wi = values[2];
    s.co = values[3];
    s.hk = values[4];
    s.wk = values[5];
    if (values.size() > 6) s.stride = values[6];
    if (values.size() > 7) s.padding = values[7];
    s.validate();
    return s;
  }
  if (kind == "rec" || kind == "recurrent") {
    if (values.size() != 2) throw ConfigError("recurrent layer needs N_IN,N_NEURONS");
    RecurrentShape s;
    s.n_in = values[0];
    s.n_neurons = values[1];
    s.validate();
    return s;
  }
  throw ConfigError("unknown layer kind '" + std::string(kind) + "'");
}

}  // namespace spikecost
