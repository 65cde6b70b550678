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

#include "spikecost/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "spikecost/analytic.hpp"
#include "spikecost/cost_model.hpp"
#include "spikecost/csv.hpp"
#include "spikecost/error.hpp"
#include "spikecost/network.hpp"
#include "spikecost/pareto.hpp"
#include "spikecost/rng.hpp"
#include "spikecost/sim.hpp"
#include "spikecost/survey.hpp"

#ifndef SPIKECOST_DATA_DIR
#define SPIKECOST_DATA_DIR "data"
#endif

namespace spikecost {

std::string bundled_data_dir() { return SPIKECOST_DATA_DIR; }

namespace {

constexpr int kWeightLo = -64;
constexpr int kWeightHi = 127;

struct RunConfig {
  std::string cost_table_path;
  std::string layer = "conv";
  std::vector<double> gammas;
  double gamma = 1.0;
  unsigned timesteps = 1;
  std::string mode = "paper";
  std::uint64_t seed = 42;
  bool simulate = false;
  std::string task;
  std::string format = "text";
  std::string out_path;
  std::vector<std::string> survey_paths;
  std::string report_path;
  unsigned threads = 1;
  std::string net = "both";
  std::string traversal = "event_driven";
  bool zero_skip = false;
  std::string dump_ifmap;
  double beta = -1.0;  // < 0: keep the layer file / default value
  int theta = 0;       // 0: keep
};

CostTable resolve_table(const RunConfig& cfg) {
  return load_cost_table(cfg.cost_table_path.empty()
                             ? bundled_data_dir() + "/cost_45nm.json"
                             : cfg.cost_table_path);
}

LayerFile resolve_layers(const RunConfig& cfg) {
  LayerFile f;
  if (std::filesystem::is_regular_file(cfg.layer)) {
    f = load_layer_file(cfg.layer);
  } else {
    f.layers.push_back(parse_inline_layer(cfg.layer));
  }
  if (cfg.beta >= 0.0) f.neuron.beta = cfg.beta;
  if (cfg.theta != 0) f.neuron.theta = cfg.theta;
  f.neuron.validate();
  return f;
}

// Output goes to --out when given, stdout otherwise.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw ComputeError("cannot write output file '" + path + "'");
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }
  void finish() {
    os_->flush();
    if (!*os_) throw ComputeError("output write failed");
  }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

std::string describe(const LayerSpec& layer) {
  std::ostringstream s;
  if (const auto* c = std::get_if<ConvShape>(&layer)) {
    const auto d = conv_output_dims(*c);
    s << "conv " << c->ci << "x" << c->hi << "x" << c->wi << " -> " << d.co << "x" << d.ho
      << "x" << d.wo << ", kernel " << c->hk << "x" << c->wk << ", stride " << c->stride
      << ", padding " << c->padding << " (n_rd = " << n_rd(*c) << ", " << output_count(*c)
      << " windows)";
  } else {
    const auto& r = std::get<RecurrentShape>(layer);
    s << "recurrent " << r.n_in << " inputs x " << r.n_neurons << " neurons";
  }
  return s.str();
}

const char* unit_name(const LayerSpec& layer) {
  return std::holds_alternative<ConvShape>(layer) ? "window" : "neuron";
}

std::vector<std::string> breakdown_fields(const EnergyBreakdown& b) {
  return {format_fixed(b.e_rd_tot_pj), format_fixed(b.e_compute_pj), format_fixed(b.e_state_pj),
          format_fixed(b.e_ofmap_pj), format_fixed(b.total_pj)};
}

constexpr const char* kSweepHeader =
    "gamma,kind,e_rd_tot_pj,e_compute_pj,e_state_pj,e_ofmap_pj,total_pj";

void print_breakdown_table(std::ostream& os, const std::vector<EnergyBreakdown>& rows,
                           const char* unit) {
  os << std::left << std::setw(16) << (std::string("per ") + unit) << std::right;
  for (const char* h : {"e_rd_tot", "e_compute", "e_state", "e_ofmap", "total"}) {
    os << std::setw(16) << h;
  }
  os << "\n";
  for (const auto& b : rows) {
    os << std::left << std::setw(16) << to_string(b.kind) << std::right;
    for (double v : {b.e_rd_tot_pj, b.e_compute_pj, b.e_state_pj, b.e_ofmap_pj}) {
      os << std::setw(16) << (format_fixed(v, 3) + " pJ");
    }
    os << std::setw(16) << format_energy(b.total_pj) << "\n";
  }
}

int cmd_estimate(const RunConfig& cfg, std::ostream& out) {
  const auto table = resolve_table(cfg);
  const auto file = resolve_layers(cfg);
  const SparsitySpec sparsity{cfg.gamma, parse_sparsity_mode(cfg.mode), cfg.seed};
  sparsity.validate();
  if (cfg.format != "text" && cfg.format != "csv") throw ConfigError("--format must be csv or text");

  Sink sink(cfg.out_path, out);
  auto& os = sink.stream();
  if (cfg.format == "csv") {
    os << kSweepHeader << "\n";
  } else {
    os << "cost table   " << table.label << "\n"
       << "gamma        " << format_shortest(cfg.gamma) << " (" << to_string(sparsity.mode)
       << "), timesteps " << cfg.timesteps << "\n";
  }

  double snn_network = 0.0;
  double ann_network = 0.0;
  for (const auto& layer : file.layers) {
    const auto snn = scale(unit_energy(layer, NetKind::snn, table), sparsity, cfg.timesteps);
    const auto ann = scale(unit_energy(layer, NetKind::ann, table), sparsity, cfg.timesteps);
    const auto snn_layer = layer_total(layer, NetKind::snn, table, sparsity, cfg.timesteps);
    const auto ann_layer = layer_total(layer, NetKind::ann, table, sparsity, cfg.timesteps);
    snn_network += snn_layer.total_pj;
    ann_network += ann_layer.total_pj;

    if (cfg.format == "csv") {
      for (const auto& b : {snn, ann}) {
        std::vector<std::string> f{format_shortest(cfg.gamma), std::string(to_string(b.kind))};
        const auto e = breakdown_fields(b);
        f.insert(f.end(), e.begin(), e.end());
        os << csv_row(f);
      }
      continue;
    }
    os << "\nlayer        " << describe(layer) << "\n\n";
    print_breakdown_table(os, {snn, ann}, unit_name(layer));
    os << "\nANN/SNN ratio   " << format_fixed(ann.total_pj / snn.total_pj, 3) << "\n"
       << "read/compute    SNN " << format_fixed(memory_to_compute_ratio(snn), 1) << "x, ANN "
       << format_fixed(memory_to_compute_ratio(ann), 1) << "x\n"
       << "layer total     SNN " << format_energy(snn_layer.total_pj) << ", ANN "
       << format_energy(ann_layer.total_pj) << "\n";
  }
  if (cfg.format == "text" && file.layers.size() > 1) {
    os << "\nnetwork total   SNN " << format_energy(snn_network) << ", ANN "
       << format_energy(ann_network) << "\n";
  }
  sink.finish();
  return kExitOk;
}

// Simulated energy of one output element for one net kind at one density.
struct SimPoint {
  OpCounts counts;
  EnergyBreakdown per_unit;
  double window_gamma = 0.0;  // density seen by the accumulation loops
  double tensor_gamma = 0.0;  // nonzero fraction of the input tensor
  QuantTensor first_input;
};

struct SimSetup {
  LayerSpec layer;
  NeuronParams neuron;
  CostTable table;
  unsigned timesteps = 1;
  std::uint64_t seed = 42;
  Traversal traversal = Traversal::event_driven;
  bool zero_skip = false;
  unsigned threads = 1;
  QuantTensor weights;  // shared by every point of a run
  QuantTensor recurrent_v;
};

SimSetup make_setup(const LayerSpec& layer, const NeuronParams& neuron, const CostTable& table,
                    const RunConfig& cfg) {
  SimSetup s;
  s.layer = layer;
  s.neuron = neuron;
  s.table = table;
  s.timesteps = cfg.timesteps;
  s.seed = cfg.seed;
  s.traversal = parse_traversal(cfg.traversal);
  s.zero_skip = cfg.zero_skip;
  s.threads = std::max(1u, cfg.threads);
  const auto wseed = derive_seed(cfg.seed, 0);
  if (const auto* c = std::get_if<ConvShape>(&layer)) {
    s.weights = gen_uniform_int8({c->co, c->ci, c->hk, c->wk}, kWeightLo, kWeightHi, wseed);
  } else {
    const auto& r = std::get<RecurrentShape>(layer);
    s.weights = gen_uniform_int8({r.n_neurons, r.n_in}, kWeightLo, kWeightHi, wseed);
    s.recurrent_v = gen_uniform_int8({r.n_neurons}, kWeightLo, kWeightHi, derive_seed(cfg.seed, 1));
  }
  return s;
}

EnergyBreakdown per_unit_energy(const OpCounts& counts, std::uint64_t units, const CostTable& t) {
  try {
    return counts_to_energy(divide_exact(counts, units), t);
  } catch (const ComputeError&) {
    auto b = counts_to_energy(counts, t);
    const double n = static_cast<double>(units);
    b.e_rd_tot_pj /= n;
    b.e_compute_pj /= n;
    b.e_state_pj /= n;
    b.e_ofmap_pj /= n;
    return b.close();
  }
}

SimPoint simulate_point(const SimSetup& s, NetKind net, double density, unsigned threads) {
  SimPoint p;
  const std::uint64_t stream = 1000 + static_cast<std::uint64_t>(std::llround(density * 1e9));
  double window_sum = 0.0;
  double tensor_sum = 0.0;
  bool first = true;

  if (const auto* conv = std::get_if<ConvShape>(&s.layer)) {
    const std::vector<std::size_t> in_dims{conv->ci, conv->hi, conv->wi};
    LifState state(output_count(*conv), s.neuron);
    for (unsigned t = 0; t < s.timesteps; ++t) {
      const auto seed = derive_seed(derive_seed(s.seed, stream), t);
      QuantTensor x = net == NetKind::snn ? gen_sparse_spikes(in_dims, density, seed)
                                          : gen_sparse_activations(in_dims, density, seed);
      window_sum += window_density(x, *conv);
      tensor_sum += static_cast<double>(x.count_nonzero()) / static_cast<double>(x.size());
      OpCounts c;
      if (net == NetKind::snn) {
        c = snn_conv_layer(x, s.weights, snn_variant(*conv), state, {s.traversal, threads}).counts;
      } else {
        c = ann_conv_layer(x, s.weights, ann_variant(*conv), {s.zero_skip, 8, threads}).counts;
      }
      if (first) {
        p.counts = c;
        p.first_input = std::move(x);
        first = false;
      } else {
        p.counts += c;
      }
    }
    p.per_unit = per_unit_energy(p.counts, output_count(*conv), s.table);
  } else {
    const auto& rec = std::get<RecurrentShape>(s.layer);
    LifState state(rec.n_neurons, s.neuron);
    std::vector<std::int8_t> hidden(rec.n_neurons, 0);
    RnnWeights rnn{s.weights, s.recurrent_v, std::vector<std::int32_t>(rec.n_neurons, 0), 8};
    for (unsigned t = 0; t < s.timesteps; ++t) {
      const auto seed = derive_seed(derive_seed(s.seed, stream), t);
      QuantTensor x = net == NetKind::snn ? gen_sparse_spikes({rec.n_in}, density, seed)
                                          : gen_sparse_activations({rec.n_in}, density, seed);
      const double g = static_cast<double>(x.count_nonzero()) / static_cast<double>(x.size());
      window_sum += g;
      tensor_sum += g;
      OpCounts c = net == NetKind::snn
                       ? recurrent_step(snn_variant(rec), s.weights, state, x, {s.traversal, 1}).counts
                       : recurrent_step(ann_variant(rec), rnn, hidden, x).counts;
      if (first) {
        p.counts = c;
        p.first_input = std::move(x);
        first = false;
      } else {
        p.counts += c;
      }
    }
    p.per_unit = per_unit_energy(p.counts, rec.n_neurons, s.table);
  }
  p.window_gamma = window_sum / s.timesteps;
  p.tensor_gamma = tensor_sum / s.timesteps;
  return p;
}

// Analytic counterpart of a simulated point: component-wise scaling at the
// measured density for paths whose reads follow the data; dense otherwise.
EnergyBreakdown analytic_reference(const SimSetup& s, NetKind net, const SimPoint& p) {
  const bool data_dependent =
      net == NetKind::snn || (s.zero_skip && std::holds_alternative<ConvShape>(s.layer));
  const double g = data_dependent ? p.window_gamma : 1.0;
  const SparsitySpec spec{g > 0.0 ? g : std::numeric_limits<double>::min(),
                          SparsityMode::component_wise, s.seed};
  return scale(unit_energy(s.layer, net, s.table), spec, s.timesteps);
}

double deviation(double sim, double ref) {
  if (ref == 0.0) return sim == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return (sim - ref) / ref;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const auto table = resolve_table(cfg);
  const auto file = resolve_layers(cfg);
  if (file.layers.size() != 1) throw ConfigError("sweep takes exactly one layer");
  const auto& layer = file.layers.front();
  std::vector<double> gammas = cfg.gammas;
  if (gammas.empty()) {
    for (int k = 10; k >= 1; --k) gammas.push_back(k / 100.0);
  }
  const auto mode = parse_sparsity_mode(cfg.mode);
  const auto rows = sweep_sparsity(layer, table, gammas, cfg.timesteps, mode);

  // Simulated columns: one independent task per (gamma, net); results are
  // stored by index so completion order never shows in the output.
  std::vector<SimPoint> sims;
  if (cfg.simulate) {
    const auto setup = make_setup(layer, file.neuron, table, cfg);
    sims.resize(rows.size() * 2);
    const unsigned threads = std::max(1u, cfg.threads);
    std::vector<std::future<void>> pending;
    std::size_t next = 0;
    auto run = [&](std::size_t i) {
      sims[i] = simulate_point(setup, i % 2 == 0 ? NetKind::snn : NetKind::ann,
                               rows[i / 2].gamma, 1);
    };
    while (next < sims.size()) {
      pending.clear();
      for (unsigned k = 0; k < threads && next < sims.size(); ++k, ++next) {
        pending.push_back(std::async(std::launch::async, run, next));
      }
      for (auto& f : pending) f.get();
    }
  }

  Sink sink(cfg.out_path, out);
  auto& os = sink.stream();
  os << kSweepHeader;
  if (cfg.simulate) {
    os << ",sim_e_rd_tot_pj,sim_e_compute_pj,sim_e_state_pj,sim_e_ofmap_pj,sim_total_pj,"
          "empirical_gamma";
  }
  os << "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const EnergyBreakdown* pair[2] = {&rows[r].snn, &rows[r].ann};
    for (int k = 0; k < 2; ++k) {
      std::vector<std::string> f{format_shortest(rows[r].gamma), std::string(to_string(pair[k]->kind))};
      const auto e = breakdown_fields(*pair[k]);
      f.insert(f.end(), e.begin(), e.end());
      if (cfg.simulate) {
        const auto& sp = sims[r * 2 + k];
        const auto se = breakdown_fields(sp.per_unit);
        f.insert(f.end(), se.begin(), se.end());
        f.push_back(format_fixed(sp.window_gamma, 9));
      }
      os << csv_row(f);
    }
  }
  sink.finish();
  return kExitOk;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  const auto table = resolve_table(cfg);
  const auto file = resolve_layers(cfg);
  if (file.layers.size() != 1) throw ConfigError("simulate takes exactly one layer");
  if (!(cfg.gamma > 0.0 && cfg.gamma <= 1.0)) throw ConfigError("--gamma must be in (0, 1]");
  if (cfg.format != "text" && cfg.format != "csv") throw ConfigError("--format must be csv or text");
  std::vector<NetKind> nets;
  if (cfg.net == "snn" || cfg.net == "both") nets.push_back(NetKind::snn);
  if (cfg.net == "ann" || cfg.net == "both") nets.push_back(NetKind::ann);
  if (nets.empty()) throw ConfigError("--net must be snn, ann or both");

  const auto setup = make_setup(file.layers.front(), file.neuron, table, cfg);
  Sink sink(cfg.out_path, out);
  auto& os = sink.stream();
  if (cfg.format == "csv") os << "counter,value\n";

  for (NetKind net : nets) {
    const auto p = simulate_point(setup, net, cfg.gamma, setup.threads);
    const auto ref = analytic_reference(setup, net, p);
    const std::string kind(to_string(p.per_unit.kind));
    if (!cfg.dump_ifmap.empty()) {
      save_tensor(p.first_input, cfg.dump_ifmap + "." + kind + ".sqt");
    }

    const double sim_v[5] = {p.per_unit.e_rd_tot_pj, p.per_unit.e_compute_pj,
                             p.per_unit.e_state_pj, p.per_unit.e_ofmap_pj, p.per_unit.total_pj};
    const double ref_v[5] = {ref.e_rd_tot_pj, ref.e_compute_pj, ref.e_state_pj, ref.e_ofmap_pj,
                             ref.total_pj};
    const char* names[5] = {"e_rd_tot_pj", "e_compute_pj", "e_state_pj", "e_ofmap_pj", "total_pj"};

    if (cfg.format == "csv") {
      write_counts_csv(os, p.counts, kind + ".", false);
      os << csv_row({kind + ".tensor_gamma", format_fixed(p.tensor_gamma, 9)});
      os << csv_row({kind + ".window_gamma", format_fixed(p.window_gamma, 9)});
      for (int i = 0; i < 5; ++i) {
        os << csv_row({kind + ".sim_" + names[i], format_fixed(sim_v[i])});
        os << csv_row({kind + ".analytic_" + names[i], format_fixed(ref_v[i])});
        os << csv_row({kind + ".deviation_" + names[i], format_fixed(deviation(sim_v[i], ref_v[i]), 9)});
      }
      continue;
    }
    os << kind << " ("
       << (net == NetKind::snn ? std::string(to_string(setup.traversal))
                               : std::string(setup.zero_skip ? "zero skipping" : "dense"))
       << ", density " << format_shortest(cfg.gamma) << ", seed " << cfg.seed << ", timesteps "
       << cfg.timesteps << ")\n"
       << "  input density " << format_fixed(p.tensor_gamma, 6) << ", window density "
       << format_fixed(p.window_gamma, 6);
    if (net == NetKind::snn) os << ", fired " << p.counts.fires << " of " << p.counts.outputs;
    os << "\n";
    std::ostringstream counts;
    write_counts_csv(counts, p.counts, "", false);
    std::string line;
    std::istringstream in(counts.str());
    while (std::getline(in, line)) {
      const auto comma = line.find(',');
      os << "  " << std::left << std::setw(16) << line.substr(0, comma) << std::right
         << line.substr(comma + 1) << "\n";
    }
    os << "  " << std::left << std::setw(16) << "per " + std::string(unit_name(setup.layer))
       << std::right << std::setw(18) << "simulated" << std::setw(18) << "analytic" << std::setw(14)
       << "deviation" << "\n";
    for (int i = 0; i < 5; ++i) {
      os << "  " << std::left << std::setw(16) << names[i] << std::right << std::setw(18)
         << format_fixed(sim_v[i], 4) << std::setw(18) << format_fixed(ref_v[i], 4)
         << std::setw(13) << format_fixed(100.0 * deviation(sim_v[i], ref_v[i]), 3) << "%\n";
    }
    os << "\n";
  }
  sink.finish();
  return kExitOk;
}

int cmd_pareto(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::string> paths = cfg.survey_paths;
  if (paths.empty()) {
    paths = {bundled_data_dir() + "/survey_imagenet.json", bundled_data_dir() + "/survey_audio.json"};
  }
  std::vector<AcceleratorRecord> records;
  for (const auto& path : paths) {
    auto part = load_survey(path);
    records.insert(records.end(), part.begin(), part.end());
  }
  if (cfg.format != "text" && cfg.format != "csv") throw ConfigError("--format must be csv or text");

  std::vector<Task> tasks;
  if (!cfg.task.empty()) {
    tasks.push_back(parse_task(cfg.task));
  } else {
    for (Task t : {Task::ImageNet, Task::VAD, Task::KWS}) {
      if (std::any_of(records.begin(), records.end(), [t](const auto& r) { return r.task == t; })) {
        tasks.push_back(t);
      }
    }
  }

  std::vector<FrontierResult> results;
  for (Task t : tasks) {
    const bool any = std::any_of(records.begin(), records.end(), [t](const auto& r) { return r.task == t; });
    if (any) results.push_back(frontier(records, t));
  }

  if (!cfg.out_path.empty()) {
    Sink csv(cfg.out_path, out);
    csv.stream() << "name,family,error_pct,energy_nj,on_frontier\n";
    for (Task t : tasks) emit_scatter(csv.stream(), records, t, false);
    csv.finish();
  }
  if (!cfg.report_path.empty()) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : results) j.push_back(to_json(r));
    Sink rep(cfg.report_path, out);
    rep.stream() << j.dump(2) << "\n";
    rep.finish();
  }

  if (cfg.format == "csv") {
    out << "name,family,error_pct,energy_nj,on_frontier\n";
    for (Task t : tasks) emit_scatter(out, records, t, false);
    return kExitOk;
  }
  for (Task t : tasks) {
    const auto it = std::find_if(results.begin(), results.end(), [t](const auto& r) { return r.task == t; });
    out << "task " << to_string(t);
    if (it == results.end()) {
      out << ": no records\n\n";
      continue;
    }
    out << "\n  frontier:";
    for (const auto& n : it->frontier) out << " " << n;
    out << "\n";
    for (const auto& [name, by] : it->dominated) {
      out << "  " << name << " dominated by " << by.size() << ":";
      for (const auto& d : by) out << " " << d;
      out << "\n";
    }
    out << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Energy-per-inference estimates for spiking and artificial neural-network accelerators"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--cost-table", cfg.cost_table_path, "Cost table JSON (default: bundled 45 nm table)");
    sub->add_option("--format", cfg.format, "Output format: csv or text");
    sub->add_option("--out", cfg.out_path, "Write the main output to PATH");
  };
  auto add_layer = [&](CLI::App* sub) {
    sub->add_option("--layer", cfg.layer,
                    "Layer JSON file, or inline conv[:CI,HI,WI,CO,HK,WK[,S[,P]]] / rec[:N_IN,N_NEURONS]");
    sub->add_option("--timesteps", cfg.timesteps, "Timesteps per inference")->check(CLI::PositiveNumber);
    sub->add_option("--mode", cfg.mode, "Sparsity scaling: paper or component");
    sub->add_option("--seed", cfg.seed, "Seed for generated tensors");
    sub->add_option("--beta", cfg.beta, "LIF decay coefficient override");
    sub->add_option("--theta", cfg.theta, "LIF threshold override");
  };

  auto* estimate = app.add_subcommand("estimate", "Analytic energy of the SNN and ANN variants of a layer");
  add_common(estimate);
  add_layer(estimate);
  estimate->add_option("--gamma", cfg.gamma, "Activity coefficient in (0, 1]");

  auto* sweep = app.add_subcommand("sweep", "Analytic (and optionally simulated) sparsity sweep as CSV");
  add_common(sweep);
  add_layer(sweep);
  sweep->add_option("--gammas", cfg.gammas, "Comma-separated activity coefficients")->delimiter(',');
  sweep->add_flag("--simulate", cfg.simulate, "Add simulator columns from seeded inputs");
  sweep->add_option("--threads", cfg.threads, "Worker threads for simulated points");
  sweep->add_option("--traversal", cfg.traversal, "Spike traversal: event_driven or dense_scan");
  sweep->add_flag("--zero-skip", cfg.zero_skip, "Skip weight reads and MACs for zero ANN activations");

  auto* simulate = app.add_subcommand("simulate", "Count operations on seeded tensors and compare with the model");
  add_common(simulate);
  add_layer(simulate);
  simulate->add_option("--gamma", cfg.gamma, "Input density in (0, 1]");
  simulate->add_option("--net", cfg.net, "snn, ann or both");
  simulate->add_option("--threads", cfg.threads, "Worker threads");
  simulate->add_option("--traversal", cfg.traversal, "Spike traversal: event_driven or dense_scan");
  simulate->add_flag("--zero-skip", cfg.zero_skip, "Skip weight reads and MACs for zero ANN activations");
  simulate->add_option("--dump-ifmap", cfg.dump_ifmap, "Write the first input tensor to PATH.<kind>.sqt");

  auto* pareto = app.add_subcommand("pareto", "Pareto frontier of surveyed accelerators");
  add_common(pareto);
  pareto->add_option("--survey", cfg.survey_paths, "Survey JSON (repeatable; default: bundled surveys)");
  pareto->add_option("--task", cfg.task, "ImageNet, VAD or KWS");
  pareto->add_option("--report", cfg.report_path, "Write the frontier report as JSON to PATH");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (*estimate) return cmd_estimate(cfg, out);
    if (*sweep) return cmd_sweep(cfg, out);
    if (*simulate) return cmd_simulate(cfg, out);
    if (*pareto) return cmd_pareto(cfg, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCompute;
  }
  return kExitConfig;
}

}  // namespace spikecost
