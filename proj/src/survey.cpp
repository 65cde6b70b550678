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

#include "spikecost/survey.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "spikecost/error.hpp"

namespace spikecost {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::ANN: return "ANN";
    case Family::SNN: return "SNN";
    case Family::Mixed: return "Mixed";
    case Family::SparseANN: return "Sparse-ANN";
  }
  return "?";
}

std::string_view to_string(Task t) {
  switch (t) {
    case Task::ImageNet: return "ImageNet";
    case Task::VAD: return "VAD";
    case Task::KWS: return "KWS";
  }
  return "?";
}

Family parse_family(std::string_view s) {
  for (Family f : {Family::ANN, Family::SNN, Family::Mixed, Family::SparseANN}) {
    if (to_string(f) == s) return f;
  }
  throw ConfigError("unknown accelerator family '" + std::string(s) + "'");
}

Task parse_task(std::string_view s) {
  for (Task t : {Task::ImageNet, Task::VAD, Task::KWS}) {
    if (to_string(t) == s) return t;
  }
  throw ConfigError("unknown task '" + std::string(s) +
                    "' (expected ImageNet, VAD or KWS)");
}

AcceleratorRecord record_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("survey record must be an object");
  auto need = [&](const char* key) -> const nlohmann::json& {
    if (!j.contains(key)) {
      throw ConfigError("survey record " + j.value("name", std::string("<unnamed>")) +
                        " is missing " + key);
    }
    return j.at(key);
  };

  AcceleratorRecord r;
  try {
    r.name = need("name").get<std::string>();
    r.family = parse_family(need("family").get<std::string>());
    r.task = parse_task(need("task").get<std::string>());
    r.task_error_pct = need("task_error_pct").get<double>();
    if (j.contains("energy_per_inference_nj")) {
      r.energy_per_inference_nj = j.at("energy_per_inference_nj").get<double>();
    } else if (j.contains("energy_per_inference_mj")) {
      r.energy_per_inference_nj = j.at("energy_per_inference_mj").get<double>() * 1e6;
    } else {
      need("energy_per_inference_nj");
    }
    if (j.contains("process_nm") && !j.at("process_nm").is_null()) {
      r.process_nm = j.at("process_nm").get<double>();
    }
    if (j.contains("extras")) {
      for (const auto& [k, v] : j.at("extras").items()) {
        r.extras[k] = v.is_string() ? v.get<std::string>() : v.dump();
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("survey record " + r.name + ": " + e.what());
  }

  if (!std::isfinite(r.energy_per_inference_nj) || r.energy_per_inference_nj <= 0.0) {
    throw ConfigError("survey record " + r.name + ": energy must be > 0");
  }
  if (!(r.task_error_pct >= 0.0 && r.task_error_pct <= 100.0)) {
    throw ConfigError("survey record " + r.name + ": task_error_pct must be in [0, 100]");
  }
  if (r.process_nm && !(*r.process_nm > 0.0)) {
    throw ConfigError("survey record " + r.name + ": process_nm must be > 0");
  }
  return r;
}

std::vector<AcceleratorRecord> survey_from_json(const nlohmann::json& j) {
  const nlohmann::json* list = &j;
  if (j.is_object()) {
    if (!j.contains("records")) throw ConfigError("survey object has no 'records' array");
    list = &j.at("records");
  }
  if (!list->is_array()) throw ConfigError("survey records must be an array");

  std::vector<AcceleratorRecord> out;
  std::set<std::string> seen;
  for (const auto& item : *list) {
    auto r = record_from_json(item);
    if (!seen.insert(r.name).second) {
      throw ConfigError("duplicate survey record name '" + r.name + "'");
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<AcceleratorRecord> load_survey(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open survey '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("survey '" + path + "': " + e.what());
  }
  return survey_from_json(j);
}

}  // namespace spikecost
