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

#include "spikecost/analytic.hpp"

#include <algorithm>
#include <cmath>

#include "spikecost/csv.hpp"
#include "spikecost/error.hpp"

namespace spikecost {

std::string_view to_string(ModelKind k) {
  switch (k) {
    case ModelKind::snn_conv: return "snn_conv";
    case ModelKind::ann_conv: return "ann_conv";
    case ModelKind::snn_recurrent: return "snn_recurrent";
    case ModelKind::rnn_recurrent: return "rnn_recurrent";
  }
  return "?";
}

EnergyBreakdown& EnergyBreakdown::close() {
  total_pj = e_rd_tot_pj + e_compute_pj + e_state_pj + e_ofmap_pj;
  return *this;
}

namespace {

// Shared by both SNN kinds: n spike/weight pairs feeding one LIF update.
// Terms are kept distributed (n*a + n*b) so that priced simulator counts
// reproduce them bit for bit.
EnergyBreakdown snn_unit(std::uint64_t n, unsigned act_bits, unsigned weight_bits,
                         unsigned state_bits, const CostTable& t, ModelKind kind) {
  if (act_bits != 1) throw ConfigError("SNN layers carry 1-bit spikes (act_bits must be 1)");
  const double rd_w = mem_energy(t, weight_bits, Access::read);
  const double rd_s = mem_energy(t, act_bits, Access::read);
  const double rd_state = mem_energy(t, state_bits, Access::read);
  const double wr_state = mem_energy(t, state_bits, Access::write);
  const double nd = static_cast<double>(n);

  EnergyBreakdown b;
  b.kind = kind;
  b.e_rd_tot_pj = nd * rd_s + nd * rd_w;
  b.e_compute_pj = nd * t.e_add_pj;
  b.e_state_pj = rd_state + t.e_mult_pj + t.e_add_pj + t.e_comp_pj + t.e_sub_pj + wr_state;
  b.e_ofmap_pj = mem_energy(t, act_bits, Access::write);
  return b.close();
}

}  // namespace

EnergyBreakdown snn_conv_window(const ConvShape& shape, const CostTable& table) {
  shape.validate();
  return snn_unit(n_rd(shape), shape.act_bits, shape.weight_bits, shape.state_bits, table,
                  ModelKind::snn_conv);
}

EnergyBreakdown ann_conv_window(const ConvShape& shape, const CostTable& t) {
  shape.validate();
  if (shape.act_bits < 2) throw ConfigError("ANN layers need multi-bit activations");
  const double nd = static_cast<double>(n_rd(shape));

  EnergyBreakdown b;
  b.kind = ModelKind::ann_conv;
  b.e_rd_tot_pj = nd * mem_energy(t, shape.act_bits, Access::read) +
                  nd * mem_energy(t, shape.weight_bits, Access::read);
  b.e_compute_pj = nd * t.e_add_pj + nd * t.e_mult_pj;
  b.e_state_pj = 0.0;
  b.e_ofmap_pj = mem_energy(t, shape.act_bits, Access::write) + t.e_add_pj;
  return b.close();
}

EnergyBreakdown snn_recurrent_neuron(const RecurrentShape& shape, const CostTable& table) {
  shape.validate();
  return snn_unit(shape.n_in, shape.act_bits, shape.weight_bits, shape.state_bits, table,
                  ModelKind::snn_recurrent);
}

EnergyBreakdown rnn_recurrent_neuron(const RecurrentShape& shape, const CostTable& t) {
  shape.validate();
  if (shape.act_bits < 2) throw ConfigError("RNN layers need multi-bit activations");
  const double n = static_cast<double>(shape.n_in);
  const double n1 = n + 1.0;

  EnergyBreakdown b;
  b.kind = ModelKind::rnn_recurrent;
  // n inputs, n+1 weights (including the recurrent one) and the hidden state.
  b.e_rd_tot_pj = n * mem_energy(t, shape.act_bits, Access::read) +
                  n1 * mem_energy(t, shape.weight_bits, Access::read) +
                  mem_energy(t, shape.state_bits, Access::read);
  b.e_compute_pj = n1 * t.e_add_pj + n1 * t.e_mult_pj;
  b.e_state_pj = mem_energy(t, shape.state_bits, Access::write);
  b.e_ofmap_pj = mem_energy(t, shape.act_bits, Access::write);
  return b.close();
}

EnergyBreakdown scale(const EnergyBreakdown& b, const SparsitySpec& sparsity,
                      unsigned timesteps) {
  sparsity.validate();
  if (timesteps == 0) throw ConfigError("timesteps must be >= 1");
  const double g = sparsity.gamma;
  const double t = static_cast<double>(timesteps);

  EnergyBreakdown out = b;
  out.e_rd_tot_pj = b.e_rd_tot_pj * g * t;
  out.e_compute_pj = b.e_compute_pj * g * t;
  if (sparsity.mode == SparsityMode::paper_faithful) {
    out.e_state_pj = b.e_state_pj * g * t;
    out.e_ofmap_pj = b.e_ofmap_pj * g * t;
  } else {
    out.e_state_pj = b.e_state_pj * t;
    out.e_ofmap_pj = b.e_ofmap_pj * t;
  }
  return out.close();
}

EnergyBreakdown unit_energy(const LayerSpec& layer, NetKind net, const CostTable& table) {
  if (const auto* conv = std::get_if<ConvShape>(&layer)) {
    return net == NetKind::snn ? snn_conv_window(snn_variant(*conv), table)
                               : ann_conv_window(ann_variant(*conv), table);
  }
  const auto& rec = std::get<RecurrentShape>(layer);
  return net == NetKind::snn ? snn_recurrent_neuron(snn_variant(rec), table)
                             : rnn_recurrent_neuron(ann_variant(rec), table);
}

std::uint64_t unit_count(const LayerSpec& layer) {
  if (const auto* conv = std::get_if<ConvShape>(&layer)) return output_count(*conv);
  const auto& rec = std::get<RecurrentShape>(layer);
  rec.validate();
  return rec.n_neurons;
}

EnergyBreakdown layer_total(const LayerSpec& layer, NetKind net, const CostTable& table,
                            const SparsitySpec& sparsity, unsigned timesteps) {
  const auto per_unit = scale(unit_energy(layer, net, table), sparsity, timesteps);
  const double n = static_cast<double>(unit_count(layer));
  EnergyBreakdown out = per_unit;
  out.e_rd_tot_pj *= n;
  out.e_compute_pj *= n;
  out.e_state_pj *= n;
  out.e_ofmap_pj *= n;
  out.close();
  if (!std::isfinite(out.total_pj)) throw ComputeError("layer energy overflows double");
  return out;
}

NetworkEnergy network_total(std::span<const LayerSpec> layers, NetKind net,
                            const CostTable& table, const SparsitySpec& sparsity,
                            unsigned timesteps) {
  NetworkEnergy out;
  for (const auto& layer : layers) {
    out.layers.push_back(layer_total(layer, net, table, sparsity, timesteps));
    out.total_pj += out.layers.back().total_pj;
  }
  if (!std::isfinite(out.total_pj)) throw ComputeError("network energy overflows double");
  return out;
}

std::vector<SweepRow> sweep_sparsity(const LayerSpec& layer, const CostTable& table,
                                     std::span<const double> gammas, unsigned timesteps,
                                     SparsityMode mode) {
  if (gammas.empty()) throw ConfigError("sparsity sweep needs at least one gamma");
  const auto snn = unit_energy(layer, NetKind::snn, table);
  const auto ann = unit_energy(layer, NetKind::ann, table);

  std::vector<SweepRow> rows;
  rows.reserve(gammas.size());
  for (double g : gammas) {
    const SparsitySpec s{g, mode, 0};
    rows.push_back({g, scale(snn, s, timesteps), scale(ann, s, timesteps)});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SweepRow& a, const SweepRow& b) { return a.gamma > b.gamma; });
  return rows;
}

double memory_to_compute_ratio(const EnergyBreakdown& b) {
  return b.e_rd_tot_pj / b.e_compute_pj;
}

std::string format_energy(double pj) {
  const char* unit = "pJ";
  double v = pj;
  if (std::abs(pj) >= 1e6) {
    v = pj / 1e6;
    unit = "uJ";
  } else if (std::abs(pj) >= 1e3) {
    v = pj / 1e3;
    unit = "nJ";
  }
  // Three significant figures for values below 1000, whole units above.
  int decimals = 0;
  if (v != 0.0) decimals = std::max(0, 2 - static_cast<int>(std::floor(std::log10(std::abs(v)))));
  return format_fixed(v, decimals) + " " + unit;
}

}  // namespace spikecost
