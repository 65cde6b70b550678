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

#include <string>

#include "json.hpp"

namespace spikecost {

/// Per-operation energies for one technology node. All values in pJ.
struct CostTable {
  double e_add_pj = 0.03;
  double e_mult_pj = 0.20;
  double e_comp_pj = 0.03;
  double e_sub_pj = 0.03;
  double e_rd_pj_per_byte = 2.50;
  double e_wr_pj_per_byte = 2.50;
  std::string label = "45 nm CMOS, 8 KB on-chip SRAM";

  /// Throws ConfigError naming the first non-positive or non-finite field.
  void validate() const;

  bool operator==(const CostTable&) const = default;
};

enum class Access { read, write };

/// Energy of one access of `bits` bits, priced pro-rata against the per-byte
/// density. A 1-bit spike access costs density / 8.
double mem_energy(const CostTable& table, unsigned bits, Access access);

CostTable cost_table_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CostTable& table);

CostTable load_cost_table(const std::string& path);
void save_cost_table(const CostTable& table, const std::string& path);

}  // namespace spikecost
