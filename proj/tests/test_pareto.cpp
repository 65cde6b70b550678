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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "spikecost/error.hpp"
#include "spikecost/pareto.hpp"
#include "test_helpers.hpp"

using namespace spikecost;

namespace {

AcceleratorRecord rec(std::string name, double nj, double err, Task task = Task::ImageNet) {
  AcceleratorRecord r;
  r.name = std::move(name);
  r.energy_per_inference_nj = nj;
  r.task_error_pct = err;
  r.task = task;
  return r;
}

const AcceleratorRecord& find(const std::vector<AcceleratorRecord>& rs, const std::string& n) {
  return *std::find_if(rs.begin(), rs.end(), [&](const auto& r) { return r.name == n; });
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_SUITE("pareto") {

TEST_CASE("dominance examples") {
  const auto img = load_survey(test::data_path("survey_imagenet.json"));
  CHECK(dominates(find(img, "C-DNN'23"), find(img, "Mo'21")));
  CHECK_FALSE(dominates(find(img, "Mo'21"), find(img, "C-DNN'23")));
  CHECK_FALSE(dominates(find(img, "Mo'21"), find(img, "Mo'21")));

  const auto audio = load_survey(test::data_path("survey_audio.json"));
  auto shan = find(audio, "Shan'23");
  auto oh = find(audio, "Oh'19");
  CHECK_THROWS_AS(dominates(shan, oh), ConfigError);
  oh.task = shan.task;  // same coordinates, forced onto one task
  CHECK_FALSE(dominates(shan, oh));
  CHECK_FALSE(dominates(oh, shan));
}

TEST_CASE("ImageNet frontier") {
  const auto img = load_survey(test::data_path("survey_imagenet.json"));
  const auto r = frontier(img);
  CHECK(r.frontier == std::vector<std::string>{"Keller'23", "C-DNN'23"});
  REQUIRE(r.dominated.count("SNPU'23"));
  CHECK(r.dominated.at("SNPU'23") ==
        std::vector<std::string>{"C-DNN'23", "Keller'23", "Mo'21", "Park'22"});
  CHECK(sorted(r.frontier) == test::brute_force_frontier(img));
  // Every non-frontier record is beaten by some frontier member.
  for (const auto& [name, by] : r.dominated) {
    CHECK(std::any_of(by.begin(), by.end(), [&](const std::string& d) {
      return std::find(r.frontier.begin(), r.frontier.end(), d) != r.frontier.end();
    }));
  }
}

TEST_CASE("audio frontiers") {
  const auto audio = load_survey(test::data_path("survey_audio.json"));
  CHECK(frontier(audio, Task::KWS).frontier ==
        std::vector<std::string>{"Gao'20", "Gao'18", "Shan'23"});
  CHECK(frontier(audio, Task::VAD).frontier == std::vector<std::string>{"Oh'19"});
  CHECK_THROWS_AS(frontier(audio), ConfigError);
  CHECK_THROWS_AS(frontier(audio, Task::ImageNet), ConfigError);
}

TEST_CASE("single record and exact ties") {
  const std::vector<AcceleratorRecord> one{rec("a", 3, 4)};
  CHECK(frontier(one).frontier == std::vector<std::string>{"a"});
  const std::vector<AcceleratorRecord> tie{rec("b", 3, 4), rec("a", 3, 4), rec("c", 5, 4)};
  const auto r = frontier(tie);
  CHECK(r.frontier == std::vector<std::string>{"a", "b"});
  CHECK(r.dominated.at("c") == std::vector<std::string>{"a", "b"});
}

TEST_CASE("scatter CSV") {
  const auto img = load_survey(test::data_path("survey_imagenet.json"));
  std::ostringstream out;
  emit_scatter(out, img, Task::ImageNet);
  CHECK(out.str() ==
        "name,family,error_pct,energy_nj,on_frontier\n"
        "Keller'23,ANN,19.50,990000.000,true\n"
        "C-DNN'23,Mixed,22.90,280000.000,true\n"
        "Mo'21,ANN,23.08,1200000.000,false\n"
        "Park'22,ANN,28.32,1490000.000,false\n"
        "SNPU'23,SNN,33.20,1950000.000,false\n");

  std::ostringstream empty;
  emit_scatter(empty, std::vector<AcceleratorRecord>{}, Task::KWS);
  CHECK(empty.str() == "name,family,error_pct,energy_nj,on_frontier\n");

  const auto audio = load_survey(test::data_path("survey_audio.json"));
  std::ostringstream a;
  for (Task t : {Task::VAD, Task::KWS}) emit_scatter(a, audio, t, false);
  const auto text = a.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 8);
  CHECK(text.find("Frenkel'22,SNN,9.30,42.000,false\n") != std::string::npos);
}

TEST_CASE("dominance is a strict partial order") {
  Xoshiro256 rng(21);
  for (int round = 0; round < 20; ++round) {
    const auto rs = test::random_records(rng, 30, Task::KWS);
    for (const auto& a : rs) {
      CHECK_FALSE(dominates(a, a));
      for (const auto& b : rs) {
        if (dominates(a, b)) CHECK_FALSE(dominates(b, a));
        for (const auto& c : rs) {
          if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
        }
      }
    }
  }
}

TEST_CASE("frontier agrees with pairwise enumeration") {
  Xoshiro256 rng(99);
  for (int round = 0; round < 300; ++round) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, 100));
    const auto rs = test::random_records(rng, n, Task::VAD);
    const auto r = frontier(rs);
    REQUIRE(sorted(r.frontier) == test::brute_force_frontier(rs));
    CHECK(r.frontier.size() + r.dominated.size() == rs.size());
  }
}

TEST_CASE("frontier is invariant under increasing transforms of one axis") {
  Xoshiro256 rng(4);
  for (int round = 0; round < 100; ++round) {
    auto rs = test::random_records(rng, 40, Task::ImageNet);
    const auto base = frontier(rs).frontier;
    auto logged = rs;
    for (auto& r : logged) r.energy_per_inference_nj = std::log(r.energy_per_inference_nj) + 100.0;
    CHECK(frontier(logged).frontier == base);
    auto cubed = rs;
    for (auto& r : cubed) r.task_error_pct = r.task_error_pct * r.task_error_pct * r.task_error_pct;
    CHECK(frontier(cubed).frontier == base);
  }
}

TEST_CASE("report JSON") {
  const auto img = load_survey(test::data_path("survey_imagenet.json"));
  const auto j = to_json(frontier(img));
  CHECK(j["task"] == "ImageNet");
  CHECK(j["dominated"]["SNPU'23"].size() == 4);
}

}  // TEST_SUITE
