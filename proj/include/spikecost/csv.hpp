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
#include <string_view>
#include <vector>

namespace spikecost {

/// Locale-independent fixed-point rendering ('.' separator, no grouping).
std::string format_fixed(double v, int decimals = 6);

/// Shortest round-trip decimal rendering, locale-independent.
std::string format_shortest(double v);

/// Quotes a field per RFC 4180 when it contains a comma, quote or newline.
std::string csv_field(std::string_view s);

/// Joins quoted fields with commas and a trailing newline.
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace spikecost
