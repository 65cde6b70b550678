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

#include "spikecost/sim.hpp"

#include <algorithm>
#include <ostream>
#include <thread>

#include "spikecost/csv.hpp"
#include "spikecost/error.hpp"
#include "spikecost/rng.hpp"

namespace spikecost {

OpCounts& OpCounts::operator+=(const OpCounts& o) {
  input_reads.count += o.input_reads.count;
  weight_reads.count += o.weight_reads.count;
  state_reads.count += o.state_reads.count;
  state_writes.count += o.state_writes.count;
  output_writes.count += o.output_writes.count;
  adds += o.adds;
  mults += o.mults;
  state_adds += o.state_adds;
  state_mults += o.state_mults;
  compares += o.compares;
  subs += o.subs;
  quant_ops += o.quant_ops;
  outputs += o.outputs;
  fires += o.fires;
  return *this;
}

OpCounts divide_exact(const OpCounts& c, std::uint64_t n) {
  if (n == 0) throw ComputeError("divide_exact by zero");
  auto div = [n](std::uint64_t v) {
    if (v % n != 0) throw ComputeError("counter not divisible by output count");
    return v / n;
  };
  OpCounts r = c;
  r.input_reads.count = div(c.input_reads.count);
  r.weight_reads.count = div(c.weight_reads.count);
  r.state_reads.count = div(c.state_reads.count);
  r.state_writes.count = div(c.state_writes.count);
  r.output_writes.count = div(c.output_writes.count);
  r.adds = div(c.adds);
  r.mults = div(c.mults);
  r.state_adds = div(c.state_adds);
  r.state_mults = div(c.state_mults);
  r.compares = div(c.compares);
  r.subs = div(c.subs);
  r.quant_ops = div(c.quant_ops);
  r.outputs = div(c.outputs);
  r.fires = div(c.fires);
  return r;
}

EnergyBreakdown counts_to_energy(const OpCounts& c, const CostTable& t) {
  auto rd = [&](const MemCounter& m) {
    return m.count == 0 ? 0.0 : static_cast<double>(m.count) * mem_energy(t, m.bits, Access::read);
  };
  auto wr = [&](const MemCounter& m) {
    return m.count == 0 ? 0.0 : static_cast<double>(m.count) * mem_energy(t, m.bits, Access::write);
  };
  auto n = [](std::uint64_t v) { return static_cast<double>(v); };

  EnergyBreakdown b;
  b.kind = c.kind;
  // Term order mirrors the closed-form expressions so dense runs match exactly.
  b.e_rd_tot_pj = rd(c.input_reads) + rd(c.weight_reads);
  b.e_compute_pj = n(c.adds) * t.e_add_pj + n(c.mults) * t.e_mult_pj;
  if (c.kind == ModelKind::rnn_recurrent) {
    // The hidden state is an operand of the MAC, not a neuron update.
    b.e_rd_tot_pj += rd(c.state_reads);
    b.e_state_pj = wr(c.state_writes);
  } else {
    b.e_state_pj = rd(c.state_reads) + n(c.state_mults) * t.e_mult_pj +
                   n(c.state_adds) * t.e_add_pj + n(c.compares) * t.e_comp_pj +
                   n(c.subs) * t.e_sub_pj + wr(c.state_writes);
  }
  b.e_ofmap_pj = wr(c.output_writes) + n(c.quant_ops) * t.e_add_pj;
  return b.close();
}

void write_counts_csv(std::ostream& out, const OpCounts& c, const std::string& prefix,
                      bool with_header) {
  auto row = [&](const char* name, std::uint64_t v) {
    out << csv_row({prefix + name, std::to_string(v)});
  };
  if (with_header) out << "counter,value\n";
  row("input_reads", c.input_reads.count);
  row("input_bits", c.input_reads.bits);
  row("weight_reads", c.weight_reads.count);
  row("weight_bits", c.weight_reads.bits);
  row("state_reads", c.state_reads.count);
  row("state_writes", c.state_writes.count);
  row("state_bits", c.state_reads.bits);
  row("output_writes", c.output_writes.count);
  row("output_bits", c.output_writes.bits);
  row("adds", c.adds);
  row("mults", c.mults);
  row("state_adds", c.state_adds);
  row("state_mults", c.state_mults);
  row("compares", c.compares);
  row("subs", c.subs);
  row("quant_ops", c.quant_ops);
  row("outputs", c.outputs);
  row("fires", c.fires);
}

std::string_view to_string(Traversal t) {
  return t == Traversal::dense_scan ? "dense_scan" : "event_driven";
}

Traversal parse_traversal(std::string_view s) {
  if (s == "dense_scan" || s == "dense") return Traversal::dense_scan;
  if (s == "event_driven" || s == "event") return Traversal::event_driven;
  throw ConfigError("unknown traversal '" + std::string(s) + "'");
}

QuantTensor gen_sparse_spikes(const std::vector<std::size_t>& dims, double density,
                              std::uint64_t seed) {
  if (!(density > 0.0 && density <= 1.0)) throw ConfigError("density must be in (0, 1]");
  QuantTensor t(dims, 1);
  Xoshiro256 rng(seed);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = rng.bernoulli(density) ? 1 : 0;
  return t;
}

QuantTensor gen_uniform_int8(const std::vector<std::size_t>& dims, int lo, int hi,
                             std::uint64_t seed) {
  if (lo < -128 || hi > 127 || lo > hi) throw ConfigError("int8 range must lie in [-128, 127]");
  QuantTensor t(dims, 8);
  Xoshiro256 rng(seed);
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i] = static_cast<std::int8_t>(rng.uniform_int(lo, hi));
  }
  return t;
}

QuantTensor gen_sparse_activations(const std::vector<std::size_t>& dims, double density,
                                   std::uint64_t seed) {
  if (!(density > 0.0 && density <= 1.0)) throw ConfigError("density must be in (0, 1]");
  QuantTensor t(dims, 8);
  Xoshiro256 rng(seed);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const bool on = rng.bernoulli(density);
    const auto value = rng.uniform_int(1, 127);
    t[i] = on ? static_cast<std::int8_t>(value) : 0;
  }
  return t;
}

namespace {

void check_conv_operands(const QuantTensor& ifmap, const QuantTensor& weights,
                         const ConvShape& shape) {
  shape.validate();
  const std::vector<std::size_t> in_dims{shape.ci, shape.hi, shape.wi};
  const std::vector<std::size_t> w_dims{shape.co, shape.ci, shape.hk, shape.wk};
  if (ifmap.dims() != in_dims) throw ConfigError("ifmap dims do not match layer shape");
  if (weights.dims() != w_dims) throw ConfigError("weight dims do not match layer shape");
  if (weights.bits() != 8) throw ConfigError("weights must be 8-bit");
  ifmap.validate();
}

// Splits [0, n) into `threads` contiguous chunks; body(lo, hi, counts) runs
// once per chunk and chunk counts are summed in chunk order.
template <typename Body>
OpCounts parallel_chunks(std::size_t n, unsigned threads, const OpCounts& proto, Body body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::vector<OpCounts> partial(threads, proto);
  if (threads == 1) {
    body(std::size_t{0}, n, partial[0]);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) {
      const std::size_t lo = n * k / threads;
      const std::size_t hi = n * (k + 1) / threads;
      pool.emplace_back([&, lo, hi, k] { body(lo, hi, partial[k]); });
    }
  }
  OpCounts total = proto;
  for (const auto& p : partial) total += p;
  return total;
}

// Input coordinate for an output coordinate and kernel offset, or -1 if it
// falls in the zero padding.
inline std::int64_t input_coord(std::size_t out, std::size_t k, const ConvShape& s,
                                std::size_t extent) {
  const std::int64_t v = static_cast<std::int64_t>(out * s.stride + k) - s.padding;
  return (v < 0 || v >= static_cast<std::int64_t>(extent)) ? -1 : v;
}

void count_neuron_update(OpCounts& c, const NeuronUpdate& u) {
  ++c.state_reads.count;
  ++c.state_mults;
  ++c.state_adds;
  ++c.compares;
  if (u.subtracted) ++c.subs;
  ++c.state_writes.count;
  ++c.output_writes.count;
  ++c.outputs;
  if (u.spike) ++c.fires;
}

}  // namespace

double window_density(const QuantTensor& ifmap, const ConvShape& shape) {
  const auto d = conv_output_dims(shape);
  std::uint64_t hits = 0;
  for (std::size_t ho = 0; ho < d.ho; ++ho) {
    for (std::size_t wo = 0; wo < d.wo; ++wo) {
      for (std::size_t c = 0; c < shape.ci; ++c) {
        for (std::size_t kh = 0; kh < shape.hk; ++kh) {
          const auto h = input_coord(ho, kh, shape, shape.hi);
          if (h < 0) continue;
          for (std::size_t kw = 0; kw < shape.wk; ++kw) {
            const auto w = input_coord(wo, kw, shape, shape.wi);
            if (w >= 0 && ifmap[ifmap.index(c, h, w)] != 0) ++hits;
          }
        }
      }
    }
  }
  return static_cast<double>(hits) /
         (static_cast<double>(d.ho) * d.wo * static_cast<double>(n_rd(shape)));
}

SnnConvResult snn_conv_layer(const QuantTensor& ifmap, const QuantTensor& weights,
                             const ConvShape& shape, LifState& state,
                             const SimOptions& options) {
  check_conv_operands(ifmap, weights, shape);
  if (ifmap.bits() != 1) throw ConfigError("SNN ifmap must be a 1-bit spike tensor");
  const auto d = conv_output_dims(shape);
  const std::size_t plane = std::size_t{d.ho} * d.wo;
  if (state.size() != plane * d.co) throw ConfigError("LIF state size does not match ofmap");

  SnnConvResult res;
  res.ofmap = QuantTensor({d.co, d.ho, d.wo}, 1);
  OpCounts proto;
  proto.kind = ModelKind::snn_conv;
  proto.input_reads.bits = 1;
  proto.weight_reads.bits = 8;
  proto.state_reads.bits = proto.state_writes.bits = 8;
  proto.output_writes.bits = 1;

  const auto bq = beta_q8(state.params.beta);

  // Nonzero spike coordinates, gathered once for the event-driven path.
  struct Event {
    std::uint32_t c, h, w;
  };
  std::vector<Event> events;
  if (options.traversal == Traversal::event_driven) {
    for (std::uint32_t c = 0; c < shape.ci; ++c)
      for (std::uint32_t h = 0; h < shape.hi; ++h)
        for (std::uint32_t w = 0; w < shape.wi; ++w)
          if (ifmap[ifmap.index(c, h, w)]) events.push_back({c, h, w});
  }

  auto update_plane = [&](std::size_t co, const std::vector<std::int32_t>& current,
                          OpCounts& c) {
    for (std::size_t p = 0; p < plane; ++p) {
      const std::size_t idx = co * plane + p;
      const auto u = lif_update(state.v[idx], state.prev_spike[idx] != 0, current[p],
                                state.params, bq);
      state.v[idx] = u.stored;
      state.prev_spike[idx] = u.spike;
      res.ofmap[idx] = u.spike;
      count_neuron_update(c, u);
    }
  };

  res.counts = parallel_chunks(d.co, options.threads, proto,
                               [&](std::size_t lo, std::size_t hi, OpCounts& c) {
    std::vector<std::int32_t> current(plane);
    for (std::size_t co = lo; co < hi; ++co) {
      std::fill(current.begin(), current.end(), 0);
      if (options.traversal == Traversal::dense_scan) {
        for (std::size_t ho = 0; ho < d.ho; ++ho) {
          for (std::size_t wo = 0; wo < d.wo; ++wo) {
            std::int32_t acc = 0;
            for (std::size_t ci = 0; ci < shape.ci; ++ci) {
              for (std::size_t kh = 0; kh < shape.hk; ++kh) {
                const auto h = input_coord(ho, kh, shape, shape.hi);
                if (h < 0) continue;
                for (std::size_t kw = 0; kw < shape.wk; ++kw) {
                  const auto w = input_coord(wo, kw, shape, shape.wi);
                  if (w < 0) continue;
                  ++c.input_reads.count;
                  if (ifmap[ifmap.index(ci, h, w)] != 0) {
                    ++c.weight_reads.count;
                    ++c.adds;
                    acc += weights[weights.index(co, ci, kh, kw)];
                  }
                }
              }
            }
            current[ho * d.wo + wo] = acc;
          }
        }
      } else {
        // Scatter each spike into every window that covers it.
        for (const auto& e : events) {
          for (std::size_t kh = 0; kh < shape.hk; ++kh) {
            const std::int64_t hh = std::int64_t{e.h} + shape.padding - static_cast<std::int64_t>(kh);
            if (hh < 0 || hh % shape.stride != 0) continue;
            const std::size_t ho = static_cast<std::size_t>(hh / shape.stride);
            if (ho >= d.ho) continue;
            for (std::size_t kw = 0; kw < shape.wk; ++kw) {
              const std::int64_t ww = std::int64_t{e.w} + shape.padding - static_cast<std::int64_t>(kw);
              if (ww < 0 || ww % shape.stride != 0) continue;
              const std::size_t wo = static_cast<std::size_t>(ww / shape.stride);
              if (wo >= d.wo) continue;
              ++c.input_reads.count;
              ++c.weight_reads.count;
              ++c.adds;
              current[ho * d.wo + wo] += weights[weights.index(co, e.c, kh, kw)];
            }
          }
        }
      }
      update_plane(co, current, c);
    }
  });
  return res;
}

AnnConvResult ann_conv_layer(const QuantTensor& ifmap, const QuantTensor& weights,
                             const ConvShape& shape, const AnnConvOptions& options) {
  check_conv_operands(ifmap, weights, shape);
  if (ifmap.bits() != 8) throw ConfigError("ANN ifmap must be 8-bit");
  if (options.requant_shift < 0 || options.requant_shift > 30) {
    throw ConfigError("requant_shift must be in [0, 30]");
  }
  const auto d = conv_output_dims(shape);

  AnnConvResult res;
  res.ofmap = QuantTensor({d.co, d.ho, d.wo}, 8);
  OpCounts proto;
  proto.kind = ModelKind::ann_conv;
  proto.input_reads.bits = 8;
  proto.weight_reads.bits = 8;
  proto.output_writes.bits = 8;

  res.counts = parallel_chunks(d.co, options.threads, proto,
                               [&](std::size_t lo, std::size_t hi, OpCounts& c) {
    for (std::size_t co = lo; co < hi; ++co) {
      for (std::size_t ho = 0; ho < d.ho; ++ho) {
        for (std::size_t wo = 0; wo < d.wo; ++wo) {
          std::int64_t acc = 0;
          for (std::size_t ci = 0; ci < shape.ci; ++ci) {
            for (std::size_t kh = 0; kh < shape.hk; ++kh) {
              const auto h = input_coord(ho, kh, shape, shape.hi);
              if (h < 0) continue;
              for (std::size_t kw = 0; kw < shape.wk; ++kw) {
                const auto w = input_coord(wo, kw, shape, shape.wi);
                if (w < 0) continue;
                ++c.input_reads.count;
                const std::int32_t x = ifmap[ifmap.index(ci, h, w)];
                if (options.zero_skipping && x == 0) continue;
                ++c.weight_reads.count;
                ++c.mults;
                ++c.adds;
                acc += x * weights[weights.index(co, ci, kh, kw)];
              }
            }
          }
          ++c.quant_ops;
          const std::int64_t relu = std::max<std::int64_t>(acc, 0) >> options.requant_shift;
          res.ofmap[res.ofmap.index(co, ho, wo)] =
              static_cast<std::int8_t>(std::min<std::int64_t>(relu, 127));
          ++c.output_writes.count;
          ++c.outputs;
        }
      }
    }
  });
  return res;
}

RecurrentResult recurrent_step(const RecurrentShape& shape, const RnnWeights& wts,
                               std::vector<std::int8_t>& hidden, const QuantTensor& x) {
  shape.validate();
  const std::size_t n = shape.n_in;
  const std::size_t m = shape.n_neurons;
  if (x.dims() != std::vector<std::size_t>{n} || x.bits() != 8) {
    throw ConfigError("RNN input must be an 8-bit vector of length n_in");
  }
  if (wts.u.dims() != std::vector<std::size_t>{m, n}) throw ConfigError("U dims mismatch");
  if (wts.v.dims() != std::vector<std::size_t>{m}) throw ConfigError("V dims mismatch");
  if (wts.bias.size() != m || hidden.size() != m) throw ConfigError("bias/state size mismatch");
  if (wts.requant_shift < 0 || wts.requant_shift > 30) {
    throw ConfigError("requant_shift must be in [0, 30]");
  }

  RecurrentResult res;
  res.output = QuantTensor({m}, 8);
  OpCounts& c = res.counts;
  c.kind = ModelKind::rnn_recurrent;
  c.input_reads.bits = 8;
  c.weight_reads.bits = 8;
  c.state_reads.bits = c.state_writes.bits = 8;
  c.output_writes.bits = 8;

  for (std::size_t i = 0; i < m; ++i) {
    std::int64_t acc = wts.bias[i];
    for (std::size_t j = 0; j < n; ++j) {
      ++c.input_reads.count;
      ++c.weight_reads.count;
      ++c.mults;
      ++c.adds;
      acc += std::int64_t{wts.u[i * n + j]} * x[j];
    }
    ++c.state_reads.count;
    ++c.weight_reads.count;
    ++c.mults;
    ++c.adds;
    acc += std::int64_t{wts.v[i]} * hidden[i];

    const std::int8_t h = saturate_int8(acc >> wts.requant_shift);
    hidden[i] = h;
    res.output[i] = h;
    ++c.state_writes.count;
    ++c.output_writes.count;
    ++c.outputs;
  }
  return res;
}

RecurrentResult recurrent_step(const RecurrentShape& shape, const QuantTensor& weights,
                               LifState& state, const QuantTensor& spikes,
                               const SimOptions& options) {
  shape.validate();
  const std::size_t n = shape.n_in;
  const std::size_t m = shape.n_neurons;
  if (spikes.dims() != std::vector<std::size_t>{n} || spikes.bits() != 1) {
    throw ConfigError("SNN input must be a 1-bit vector of length n_in");
  }
  spikes.validate();
  if (weights.dims() != std::vector<std::size_t>{m, n} || weights.bits() != 8) {
    throw ConfigError("weight dims mismatch");
  }
  if (state.size() != m) throw ConfigError("LIF state size mismatch");

  RecurrentResult res;
  res.output = QuantTensor({m}, 1);
  OpCounts& c = res.counts;
  c.kind = ModelKind::snn_recurrent;
  c.input_reads.bits = 1;
  c.weight_reads.bits = 8;
  c.state_reads.bits = c.state_writes.bits = 8;
  c.output_writes.bits = 1;

  std::vector<std::uint32_t> active;
  for (std::size_t j = 0; j < n; ++j) {
    if (spikes[j]) active.push_back(static_cast<std::uint32_t>(j));
  }

  const auto bq = beta_q8(state.params.beta);
  for (std::size_t i = 0; i < m; ++i) {
    std::int64_t current = 0;
    if (options.traversal == Traversal::dense_scan) {
      for (std::size_t j = 0; j < n; ++j) {
        ++c.input_reads.count;
        if (spikes[j]) {
          ++c.weight_reads.count;
          ++c.adds;
          current += weights[i * n + j];
        }
      }
    } else {
      for (auto j : active) {
        ++c.input_reads.count;
        ++c.weight_reads.count;
        ++c.adds;
        current += weights[i * n + j];
      }
    }
    const auto u = lif_update(state.v[i], state.prev_spike[i] != 0, current, state.params, bq);
    state.v[i] = u.stored;
    state.prev_spike[i] = u.spike;
    res.output[i] = u.spike;
    count_neuron_update(c, u);
  }
  return res;
}

}  // namespace spikecost
