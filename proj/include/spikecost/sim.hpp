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
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spikecost/analytic.hpp"
#include "spikecost/cost_model.hpp"
#include "spikecost/lif.hpp"
#include "spikecost/network.hpp"
#include "spikecost/tensor.hpp"

namespace spikecost {

struct MemCounter {
  std::uint64_t count = 0;
  unsigned bits = 8;

  bool operator==(const MemCounter&) const = default;
};

/// Exact tallies of one simulated run. Accumulate-phase arithmetic (adds,
/// mults) is kept apart from neuron-update arithmetic so that pricing can
/// reproduce the four-term split of the analytic model.
struct OpCounts {
  ModelKind kind = ModelKind::snn_conv;

  MemCounter input_reads{0, 1};
  MemCounter weight_reads{0, 8};
  MemCounter state_reads{0, 8};
  MemCounter state_writes{0, 8};
  MemCounter output_writes{0, 1};

  std::uint64_t adds = 0;
  std::uint64_t mults = 0;
  std::uint64_t state_adds = 0;
  std::uint64_t state_mults = 0;
  std::uint64_t compares = 0;
  std::uint64_t subs = 0;
  std::uint64_t quant_ops = 0;  // ReLU + requantisation, priced as an add

  std::uint64_t outputs = 0;  // output elements produced
  std::uint64_t fires = 0;    // of which spiked (SNN kinds)

  OpCounts& operator+=(const OpCounts& o);
  bool operator==(const OpCounts&) const = default;
};

/// Every counter divided by n; throws ComputeError unless all divide exactly.
OpCounts divide_exact(const OpCounts& c, std::uint64_t n);

/// Prices counts into the same breakdown the analytic model produces.
EnergyBreakdown counts_to_energy(const OpCounts& counts, const CostTable& table);

/// `counter,value` CSV rows; counter names get `prefix` prepended.
void write_counts_csv(std::ostream& out, const OpCounts& counts, const std::string& prefix = "",
                      bool with_header = true);

enum class Traversal {
  dense_scan,    // visit every window position, read every spike bit
  event_driven,  // visit only nonzero spikes; zero positions are never read
};

std::string_view to_string(Traversal t);
Traversal parse_traversal(std::string_view s);

struct SimOptions {
  Traversal traversal = Traversal::event_driven;
  unsigned threads = 1;
};

/// i.i.d. Bernoulli(density) spikes from Xoshiro256(seed), row-major order.
QuantTensor gen_sparse_spikes(const std::vector<std::size_t>& dims, double density,
                              std::uint64_t seed);

/// 8-bit tensor with elements uniform in [lo, hi].
QuantTensor gen_uniform_int8(const std::vector<std::size_t>& dims, int lo, int hi,
                             std::uint64_t seed);

/// 8-bit activations: nonzero with probability `density`, nonzero values
/// uniform in [1, 127].
QuantTensor gen_sparse_activations(const std::vector<std::size_t>& dims, double density,
                                   std::uint64_t seed);

/// Fraction of (output window, kernel position) pairs that land on a spike.
/// Padded positions count as window positions without a spike.
double window_density(const QuantTensor& ifmap, const ConvShape& shape);

struct SnnConvResult {
  QuantTensor ofmap;
  OpCounts counts;
};

/// One timestep of a spiking convolution layer. `state` holds co*ho*wo
/// neurons and is advanced in place. Weight reads and accumulations are
/// counted only for nonzero spikes; the zero test itself is free.
SnnConvResult snn_conv_layer(const QuantTensor& ifmap, const QuantTensor& weights,
                             const ConvShape& shape, LifState& state,
                             const SimOptions& options = {});

struct AnnConvOptions {
  bool zero_skipping = false;  // skip weight read and MAC for zero inputs
  int requant_shift = 8;
  unsigned threads = 1;
};

struct AnnConvResult {
  QuantTensor ofmap;
  OpCounts counts;
};

/// Quantised ANN convolution: int32 MAC, ReLU, saturating right shift to int8.
AnnConvResult ann_conv_layer(const QuantTensor& ifmap, const QuantTensor& weights,
                             const ConvShape& shape, const AnnConvOptions& options = {});

/// Vanilla RNN parameters. `v` is the per-neuron recurrent weight.
struct RnnWeights {
  QuantTensor u;                   // (n_neurons, n_in)
  QuantTensor v;                   // (n_neurons)
  std::vector<std::int32_t> bias;  // n_neurons; used in the math, not priced
  int requant_shift = 8;
};

struct RecurrentResult {
  QuantTensor output;
  OpCounts counts;
};

/// h <- sat8((U x + v .* h + b) >> shift); the new h is also the output.
RecurrentResult recurrent_step(const RecurrentShape& shape, const RnnWeights& weights,
                               std::vector<std::int8_t>& hidden, const QuantTensor& x);

/// Spiking recurrent layer step: synaptic current from weights (n_neurons,
/// n_in) gated by input spikes, then one LIF update per neuron.
RecurrentResult recurrent_step(const RecurrentShape& shape, const QuantTensor& weights,
                               LifState& state, const QuantTensor& spikes,
                               const SimOptions& options = {});

}  // namespace spikecost
