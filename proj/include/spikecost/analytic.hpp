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
#include <string_view>
#include <vector>

#include "spikecost/cost_model.hpp"
#include "spikecost/network.hpp"

namespace spikecost {

enum class ModelKind { snn_conv, ann_conv, snn_recurrent, rnn_recurrent };
enum class NetKind { snn, ann };

std::string_view to_string(ModelKind k);

/// Energy of one output element (conv window or recurrent neuron), split the
/// way the closed-form model splits it. All values in pJ.
struct EnergyBreakdown {
  double e_rd_tot_pj = 0.0;   // input and weight reads
  double e_compute_pj = 0.0;  // accumulate (SNN) or MAC (ANN)
  double e_state_pj = 0.0;    // state read/update/write
  double e_ofmap_pj = 0.0;    // output write (+ requantisation)
  double total_pj = 0.0;
  ModelKind kind = ModelKind::snn_conv;

  /// Sets total_pj to the component sum.
  EnergyBreakdown& close();
};

/// Dense, single-timestep energy of one SNN convolution window.
/// Requires act_bits == 1.
EnergyBreakdown snn_conv_window(const ConvShape& shape, const CostTable& table);

/// Dense energy of one ANN convolution window; activation energy is zero and
/// requantisation is priced as one addition. Requires act_bits > 1.
EnergyBreakdown ann_conv_window(const ConvShape& shape, const CostTable& table);

/// Dense energy of one LIF neuron in a layer with `n_in` spike inputs.
EnergyBreakdown snn_recurrent_neuron(const RecurrentShape& shape, const CostTable& table);

/// Dense energy of one vanilla RNN neuron: n_in inputs plus the hidden state
/// and its recurrent weight.
EnergyBreakdown rnn_recurrent_neuron(const RecurrentShape& shape, const CostTable& table);

/// Applies the activity coefficient and the timestep multiplier.
EnergyBreakdown scale(const EnergyBreakdown& b, const SparsitySpec& sparsity,
                      unsigned timesteps);

/// Per-output-element energy for the SNN or ANN variant of a layer.
EnergyBreakdown unit_energy(const LayerSpec& layer, NetKind net, const CostTable& table);

/// Output elements of a layer: co*ho*wo windows or n_neurons.
std::uint64_t unit_count(const LayerSpec& layer);

EnergyBreakdown layer_total(const LayerSpec& layer, NetKind net, const CostTable& table,
                            const SparsitySpec& sparsity, unsigned timesteps);

struct NetworkEnergy {
  std::vector<EnergyBreakdown> layers;
  double total_pj = 0.0;
};

NetworkEnergy network_total(std::span<const LayerSpec> layers, NetKind net,
                            const CostTable& table, const SparsitySpec& sparsity,
                            unsigned timesteps);

struct SweepRow {
  double gamma = 1.0;
  EnergyBreakdown snn;
  EnergyBreakdown ann;
};

/// One row per gamma, sorted by gamma descending. Energies are per output
/// element, like unit_energy.
std::vector<SweepRow> sweep_sparsity(const LayerSpec& layer, const CostTable& table,
                                     std::span<const double> gammas, unsigned timesteps,
                                     SparsityMode mode = SparsityMode::paper_faithful);

/// Read energy over accumulate/MAC energy.
double memory_to_compute_ratio(const EnergyBreakdown& b);

/// "13.1 nJ" style: 3 significant figures, pJ below 1e3, nJ below 1e6,
/// otherwise uJ.
std::string format_energy(double pj);

}  // namespace spikecost
