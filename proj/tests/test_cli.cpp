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

#include "doctest.h"
#include "json.hpp"
#include "test_helpers.hpp"

using namespace spikecost;
using test::run;

namespace {

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto nl = s.find('\n', pos);
    out.push_back(s.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("estimate reports the default conv and recurrent layers") {
  const auto conv = run({"estimate"});
  REQUIRE(conv.code == 0);
  CHECK(conv.out.find("13.1 nJ") != std::string::npos);
  CHECK(conv.out.find("24.1 nJ") != std::string::npos);
  CHECK(conv.out.find("ANN/SNN ratio   1.839") != std::string::npos);

  const auto rec = run({"estimate", "--layer", "recurrent"});
  REQUIRE(rec.code == 0);
  CHECK(rec.out.find("2.92 nJ") != std::string::npos);
  CHECK(rec.out.find("5.37 nJ") != std::string::npos);
  CHECK(rec.out.find("ANN/SNN ratio   1.840") != std::string::npos);
}

TEST_CASE("explicit defaults change nothing") {
  CHECK(run({"estimate", "--gamma", "1", "--timesteps", "1"}).out == run({"estimate"}).out);
  CHECK(run({"estimate", "--format", "csv", "--gamma", "1", "--timesteps", "1"}).out ==
        run({"estimate", "--format", "csv"}).out);
}

TEST_CASE("a dense sweep row equals the estimate") {
  const auto sweep = run({"sweep", "--gammas", "1.0"});
  REQUIRE(sweep.code == 0);
  CHECK(sweep.out == run({"estimate", "--format", "csv"}).out);
  CHECK(count_lines(sweep.out) == 3);
}

TEST_CASE("default sweep covers 90-99% sparsity") {
  const auto r = run({"sweep"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 21);
  CHECK(ls[0] == "gamma,kind,e_rd_tot_pj,e_compute_pj,e_state_pj,e_ofmap_pj,total_pj");
  CHECK(ls[1].rfind("0.1,snn_conv,", 0) == 0);
  CHECK(ls[20].rfind("0.01,ann_conv,", 0) == 0);
}

TEST_CASE("sweep writes to a file") {
  const auto path = test::temp_path("sweep.csv");
  const auto r = run({"sweep", "--gammas", "0.5,0.25", "--out", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  CHECK(count_lines(test::read_file(path)) == 5);
}

TEST_CASE("pareto reports") {
  const auto img = run({"pareto", "--task", "ImageNet"});
  REQUIRE(img.code == 0);
  CHECK(img.out.find("frontier: Keller'23 C-DNN'23") != std::string::npos);
  CHECK(img.out.find("SNPU'23 dominated by 4:") != std::string::npos);

  const auto vad = run({"pareto", "--task", "VAD", "--format", "csv"});
  REQUIRE(vad.code == 0);
  CHECK(count_lines(vad.out) == 3);
  CHECK(vad.out.find("Yang'19") != std::string::npos);
  CHECK(vad.out.find("Oh'19") != std::string::npos);

  const auto scatter = test::temp_path("scatter.csv");
  const auto report = test::temp_path("report.json");
  REQUIRE(run({"pareto", "--out", scatter, "--report", report}).code == 0);
  CHECK(count_lines(test::read_file(scatter)) == 14);
  const auto j = nlohmann::json::parse(test::read_file(report));
  CHECK(j.size() == 3);
}

TEST_CASE("exit codes") {
  const auto bad_task = run({"pareto", "--task", "CIFAR"});
  CHECK(bad_task.code == 2);
  CHECK(bad_task.err.find("CIFAR") != std::string::npos);
  CHECK(run({"estimate", "--gamma", "0"}).code == 2);
  CHECK(run({"estimate", "--gamma", "1.5"}).code == 2);
  CHECK(run({"estimate", "--mode", "sideways"}).code == 2);
  CHECK(run({"estimate", "--layer", "conv:1,2"}).code == 2);
  CHECK(run({"estimate", "--cost-table", test::temp_path("missing.json")}).code == 2);
  CHECK(run({"estimate", "--format", "xml"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"sweep", "--out", "/nonexistent-dir/x.csv"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("simulate compares against the model") {
  const auto r = run({"simulate", "--layer", "conv:32,6,6,8,3,3", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("counter,value\n", 0) == 0);
  CHECK(r.out.find("snn_conv.deviation_total_pj,0.000000000\n") != std::string::npos);
  CHECK(r.out.find("ann_conv.deviation_total_pj,0.000000000\n") != std::string::npos);

  const auto rec = run({"simulate", "--layer", "rec:256,16", "--net", "ann", "--format", "csv"});
  REQUIRE(rec.code == 0);
  CHECK(rec.out.find("rnn_recurrent.deviation_total_pj,0.000000000\n") != std::string::npos);

  const auto text = run({"simulate", "--layer", "conv:32,6,6,8,3,3", "--gamma", "0.3"});
  REQUIRE(text.code == 0);
  CHECK(text.out.find("snn_conv (event_driven, density 0.3") != std::string::npos);
}

TEST_CASE("simulate output is reproducible across runs and thread counts") {
  const std::vector<std::string> base{"simulate", "--layer", "conv:16,8,8,8,3,3", "--gamma",
                                      "0.2", "--timesteps", "2", "--format", "csv"};
  auto with_threads = base;
  with_threads.insert(with_threads.end(), {"--threads", "3"});
  const auto a = run(base);
  REQUIRE(a.code == 0);
  CHECK(a.out == run(base).out);
  CHECK(a.out == run(with_threads).out);
}

TEST_CASE("dumped inputs load back") {
  const auto prefix = test::temp_path("dump");
  REQUIRE(run({"simulate", "--layer", "conv:4,5,5,2,3,3", "--gamma", "0.5", "--dump-ifmap",
               prefix}).code == 0);
  CHECK(test::read_file(prefix + ".snn_conv.sqt").substr(0, 4) == "SQT1");
  CHECK(test::read_file(prefix + ".ann_conv.sqt").substr(0, 4) == "SQT1");
}

}  // TEST_SUITE
