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

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "spikecost/survey.hpp"

namespace spikecost {

/// Weak Pareto dominance on (energy, error): no worse on both, strictly better
/// on at least one. Throws ConfigError when the records target different tasks.
bool dominates(const AcceleratorRecord& a, const AcceleratorRecord& b);

struct FrontierResult {
  Task task = Task::ImageNet;
  std::vector<std::string> frontier;  // ascending error, then name
  std::map<std::string, std::vector<std::string>> dominated;  // name -> all dominators, sorted
};

/// Frontier of the records for `task`, or of all records when `task` is empty
/// (in which case they must share one task). Throws ConfigError when nothing
/// is left after filtering.
FrontierResult frontier(std::span<const AcceleratorRecord> records,
                        std::optional<Task> task = std::nullopt);

nlohmann::json to_json(const FrontierResult& r);

/// Scatter CSV `name,family,error_pct,energy_nj,on_frontier` for one task,
/// ordered by error then name. Header only when no record matches.
void emit_scatter(std::ostream& out, std::span<const AcceleratorRecord> records, Task task,
                  bool with_header = true);

}  // namespace spikecost
