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

#include "spikecost/cost_model.hpp"

#include <cmath>
#include <fstream>

#include "spikecost/error.hpp"

namespace spikecost {

namespace {

void require_positive(double v, const char* name) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw ConfigError(std::string(name) + " must be > 0");
  }
}

double number_field(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number()) {
    throw ConfigError(std::string(key) + " must be a number");
  }
  return v.get<double>();
}

}  // namespace

void CostTable::validate() const {
  require_positive(e_add_pj, "e_add_pj");
  require_positive(e_mult_pj, "e_mult_pj");
  require_positive(e_comp_pj, "e_comp_pj");
  require_positive(e_sub_pj, "e_sub_pj");
  require_positive(e_rd_pj_per_byte, "e_rd_pj_per_byte");
  require_positive(e_wr_pj_per_byte, "e_wr_pj_per_byte");
}

double mem_energy(const CostTable& table, unsigned bits, Access access) {
  if (bits == 0) {
    throw ConfigError("memory access width must be >= 1 bit");
  }
  const double density =
      access == Access::read ? table.e_rd_pj_per_byte : table.e_wr_pj_per_byte;
  return (static_cast<double>(bits) / 8.0) * density;
}

CostTable cost_table_from_json(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw ConfigError("cost table must be a JSON object");
  }
  static constexpr const char* kKnown[] = {
      "e_add_pj", "e_mult_pj", "e_comp_pj", "e_sub_pj",
      "e_rd_pj_per_byte", "e_wr_pj_per_byte", "label"};
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (const char* k : kKnown) known = known || key == k;
    if (!known) throw ConfigError("unknown cost table field '" + key + "'");
  }
  for (const char* required : {"e_add_pj", "e_mult_pj", "e_rd_pj_per_byte"}) {
    if (!j.contains(required)) {
      throw ConfigError(std::string("cost table is missing ") + required);
    }
  }

  CostTable t;
  t.e_add_pj = number_field(j, "e_add_pj");
  t.e_mult_pj = number_field(j, "e_mult_pj");
  t.e_rd_pj_per_byte = number_field(j, "e_rd_pj_per_byte");
  // Comparison and subtraction default to the price of an addition; writes
  // default to the read density.
  t.e_comp_pj = j.contains("e_comp_pj") ? number_field(j, "e_comp_pj") : t.e_add_pj;
  t.e_sub_pj = j.contains("e_sub_pj") ? number_field(j, "e_sub_pj") : t.e_add_pj;
  t.e_wr_pj_per_byte = j.contains("e_wr_pj_per_byte")
                           ? number_field(j, "e_wr_pj_per_byte")
                           : t.e_rd_pj_per_byte;
  t.label = j.value("label", std::string{});
  t.validate();
  return t;
}

nlohmann::json to_json(const CostTable& t) {
  return nlohmann::json{{"label", t.label},
                        {"e_add_pj", t.e_add_pj},
                        {"e_mult_pj", t.e_mult_pj},
                        {"e_comp_pj", t.e_comp_pj},
                        {"e_sub_pj", t.e_sub_pj},
                        {"e_rd_pj_per_byte", t.e_rd_pj_per_byte},
                        {"e_wr_pj_per_byte", t.e_wr_pj_per_byte}};
}

CostTable load_cost_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open cost table '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("cost table '" + path + "': " + e.what());
  }
  return cost_table_from_json(j);
}

void save_cost_table(const CostTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ComputeError("cannot write '" + path + "'");
  out << to_json(table).dump(2) << '\n';
}

}  // namespace spikecost
