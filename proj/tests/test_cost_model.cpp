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

#include "doctest.h"
#include "spikecost/cost_model.hpp"
#include "spikecost/error.hpp"
#include "spikecost/rng.hpp"
#include "test_helpers.hpp"

using namespace spikecost;

TEST_SUITE("cost_model") {

TEST_CASE("bundled 45 nm table") {
  const auto t = load_cost_table(test::data_path("cost_45nm.json"));
  CHECK(t.e_add_pj == 0.03);
  CHECK(t.e_mult_pj == 0.20);
  CHECK(t.e_comp_pj == t.e_add_pj);
  CHECK(t.e_sub_pj == t.e_add_pj);
  CHECK(t.e_rd_pj_per_byte == 2.50);
  CHECK(t.e_wr_pj_per_byte == 2.50);
  CHECK(t == CostTable{});
}

TEST_CASE("optional fields default to add and read prices") {
  const auto t = cost_table_from_json(
      nlohmann::json{{"e_add_pj", 0.03}, {"e_mult_pj", 0.20}, {"e_rd_pj_per_byte", 2.50}});
  CHECK(t.e_comp_pj == 0.03);
  CHECK(t.e_sub_pj == 0.03);
  CHECK(t.e_wr_pj_per_byte == 2.50);
}

TEST_CASE("identity-priced table is accepted") {
  nlohmann::json j;
  for (const char* k : {"e_add_pj", "e_mult_pj", "e_comp_pj", "e_sub_pj", "e_rd_pj_per_byte",
                        "e_wr_pj_per_byte"}) {
    j[k] = 1.0;
  }
  const auto t = cost_table_from_json(j);
  CHECK(t.e_mult_pj == 1.0);
  CHECK(mem_energy(t, 8, Access::write) == 1.0);
}

TEST_CASE("validation names the offending field") {
  auto j = to_json(CostTable{});
  j["e_mult_pj"] = -1;
  CHECK_THROWS_WITH_AS(cost_table_from_json(j), "e_mult_pj must be > 0", ConfigError);
  j["e_mult_pj"] = 0.2;
  j["e_wr_pj_per_byte"] = 0.0;
  CHECK_THROWS_WITH_AS(cost_table_from_json(j), "e_wr_pj_per_byte must be > 0", ConfigError);
  j = to_json(CostTable{});
  j["e_mlut_pj"] = 1.0;
  CHECK_THROWS_AS(cost_table_from_json(j), ConfigError);
  j = to_json(CostTable{});
  j.erase("e_add_pj");
  CHECK_THROWS_AS(cost_table_from_json(j), ConfigError);
}

TEST_CASE("malformed or missing files") {
  const auto path = test::temp_path("bad_table.json");
  test::write_file(path, "{ \"e_add_pj\": ");
  CHECK_THROWS_AS(load_cost_table(path), ConfigError);
  CHECK_THROWS_AS(load_cost_table(test::temp_path("does_not_exist.json")), ConfigError);
}

TEST_CASE("mem_energy prices accesses pro rata") {
  const CostTable t;
  CHECK(mem_energy(t, 8, Access::read) == doctest::Approx(2.5));
  CHECK(mem_energy(t, 1, Access::read) == doctest::Approx(0.3125));
  // 8 bytes at 2.5 pJ/B.
  CHECK(mem_energy(t, 64, Access::read) == doctest::Approx(8 * 2.5));
  CHECK_THROWS_AS(mem_energy(t, 0, Access::read), ConfigError);
  // One 8-bit read costs at least 12x one 8-bit multiply.
  CHECK(mem_energy(t, 8, Access::read) >= 12 * t.e_mult_pj);
}

TEST_CASE("mem_energy is additive in width") {
  Xoshiro256 rng(7);
  for (int i = 0; i < 500; ++i) {
    CostTable t;
    t.e_rd_pj_per_byte = 0.01 + rng.uniform() * 10;
    t.e_wr_pj_per_byte = 0.01 + rng.uniform() * 10;
    const auto a = static_cast<unsigned>(rng.uniform_int(1, 512));
    const auto b = static_cast<unsigned>(rng.uniform_int(1, 512));
    for (Access acc : {Access::read, Access::write}) {
      CHECK(mem_energy(t, a + b, acc) ==
            doctest::Approx(mem_energy(t, a, acc) + mem_energy(t, b, acc)).epsilon(1e-12));
    }
  }
}

TEST_CASE("round trip through a file preserves every field") {
  Xoshiro256 rng(11);
  for (int i = 0; i < 50; ++i) {
    CostTable t;
    t.e_add_pj = 1e-3 + rng.uniform();
    t.e_mult_pj = 1e-3 + rng.uniform();
    t.e_comp_pj = 1e-3 + rng.uniform();
    t.e_sub_pj = 1e-3 + rng.uniform();
    t.e_rd_pj_per_byte = 1e-3 + 10 * rng.uniform();
    t.e_wr_pj_per_byte = 1e-3 + 10 * rng.uniform();
    t.label = "node " + std::to_string(i);
    const auto path = test::temp_path("roundtrip.json");
    save_cost_table(t, path);
    CHECK(load_cost_table(path) == t);
  }
}

}  // TEST_SUITE
