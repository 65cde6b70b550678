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

#include "spikecost/pareto.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <set>

#include "spikecost/csv.hpp"
#include "spikecost/error.hpp"

namespace spikecost {

bool dominates(const AcceleratorRecord& a, const AcceleratorRecord& b) {
  if (a.task != b.task) {
    throw ConfigError("cannot compare " + a.name + " (" + std::string(to_string(a.task)) +
                      ") with " + b.name + " (" + std::string(to_string(b.task)) + ")");
  }
  const bool no_worse = a.energy_per_inference_nj <= b.energy_per_inference_nj &&
                        a.task_error_pct <= b.task_error_pct;
  const bool better = a.energy_per_inference_nj < b.energy_per_inference_nj ||
                      a.task_error_pct < b.task_error_pct;
  return no_worse && better;
}

namespace {

std::vector<const AcceleratorRecord*> filter_by_task(std::span<const AcceleratorRecord> records,
                                                     Task task) {
  std::vector<const AcceleratorRecord*> out;
  for (const auto& r : records) {
    if (r.task == task) out.push_back(&r);
  }
  std::sort(out.begin(), out.end(), [](const auto* a, const auto* b) {
    if (a->task_error_pct != b->task_error_pct) return a->task_error_pct < b->task_error_pct;
    return a->name < b->name;
  });
  return out;
}

}  // namespace

FrontierResult frontier(std::span<const AcceleratorRecord> records, std::optional<Task> task) {
  if (!task) {
    if (records.empty()) throw ConfigError("no records to analyse");
    task = records.front().task;
    for (const auto& r : records) {
      if (r.task != *task) throw ConfigError("records span several tasks; pick one with a task filter");
    }
  }
  const auto sel = filter_by_task(records, *task);
  if (sel.empty()) {
    throw ConfigError("no records for task " + std::string(to_string(*task)));
  }

  FrontierResult res;
  res.task = *task;

  // Sweep in ascending error. A record survives when it has the lowest energy
  // of its error group and beats every strictly-lower-error energy.
  double best_below = std::numeric_limits<double>::infinity();
  std::set<std::string> on_front;
  for (std::size_t i = 0; i < sel.size();) {
    std::size_t j = i;
    double group_min = std::numeric_limits<double>::infinity();
    while (j < sel.size() && sel[j]->task_error_pct == sel[i]->task_error_pct) {
      group_min = std::min(group_min, sel[j]->energy_per_inference_nj);
      ++j;
    }
    for (std::size_t k = i; k < j; ++k) {
      const double e = sel[k]->energy_per_inference_nj;
      if (e == group_min && e < best_below) {
        res.frontier.push_back(sel[k]->name);
        on_front.insert(sel[k]->name);
      }
    }
    best_below = std::min(best_below, group_min);
    i = j;
  }

  for (const auto* b : sel) {
    if (on_front.count(b->name)) continue;
    auto& doms = res.dominated[b->name];
    for (const auto* a : sel) {
      if (dominates(*a, *b)) doms.push_back(a->name);
    }
    std::sort(doms.begin(), doms.end());
  }
  return res;
}

nlohmann::json to_json(const FrontierResult& r) {
  nlohmann::json dominated = nlohmann::json::object();
  for (const auto& [name, by] : r.dominated) dominated[name] = by;
  return nlohmann::json{{"task", std::string(to_string(r.task))},
                        {"frontier", r.frontier},
                        {"dominated", dominated}};
}

void emit_scatter(std::ostream& out, std::span<const AcceleratorRecord> records, Task task,
                  bool with_header) {
  if (with_header) out << "name,family,error_pct,energy_nj,on_frontier\n";
  const auto sel = filter_by_task(records, task);
  if (sel.empty()) return;
  const auto fr = frontier(records, task);
  const std::set<std::string> on_front(fr.frontier.begin(), fr.frontier.end());
  for (const auto* r : sel) {
    out << csv_row({r->name, std::string(to_string(r->family)), format_fixed(r->task_error_pct, 2),
                    format_fixed(r->energy_per_inference_nj, 3),
                    on_front.count(r->name) ? "true" : "false"});
  }
}

}  // namespace spikecost
