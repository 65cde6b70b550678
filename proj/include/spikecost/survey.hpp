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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace spikecost {

enum class Family { ANN, SNN, Mixed, SparseANN };
enum class Task { ImageNet, VAD, KWS };

std::string_view to_string(Family f);
std::string_view to_string(Task t);
Family parse_family(std::string_view s);
/// Throws ConfigError for unknown names.
Task parse_task(std::string_view s);

/// One published accelerator data point. Energies are always nJ.
struct AcceleratorRecord {
  std::string name;
  Family family = Family::ANN;
  std::optional<double> process_nm;  // empty for FPGA designs
  double energy_per_inference_nj = 0.0;
  double task_error_pct = 0.0;
  Task task = Task::ImageNet;
  std::map<std::string, std::string> extras;
};

/// Accepts `energy_per_inference_nj` or `energy_per_inference_mj` (converted).
AcceleratorRecord record_from_json(const nlohmann::json& j);

/// Either a bare array of records or an object with a "records" array.
std::vector<AcceleratorRecord> survey_from_json(const nlohmann::json& j);
std::vector<AcceleratorRecord> load_survey(const std::string& path);

}  // namespace spikecost
