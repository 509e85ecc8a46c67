// Copyright 2026 The covplan Authors
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

#include <gtest/gtest.h>

#include <filesystem>

#include "covplan/scenario_io.hpp"
#include "test_util.hpp"

namespace covplan {
namespace {

ScenarioParseError parse_error(const std::string& text) {
  try {
    (void)parse_scenario(text, "t.json");
  } catch (const ScenarioParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ScenarioParseError("", 0, "", "");
}

TEST(ScenarioIo, ShippedScenariosLoad) {
  for (const auto& entry : std::filesystem::directory_iterator(COVPLAN_SCENARIO_DIR)) {
    if (entry.path().extension() != ".json") continue;
    SCOPED_TRACE(entry.path().string());
    const auto cfg = load_scenario(entry.path());
    EXPECT_NO_THROW(GridScenario{cfg});
  }
}

TEST(ScenarioIo, RoundTrip) {
  ScenarioConfig c;
  c.rows = 2;
  c.cols = 3;
  c.endpoints = {{{0, 0}, {1, 2}}, {{1, 0}, {0, 2}}};
  c.obstacles = {{0, 1}};
  c.weights.obstacle_edge = 7.5;
  c.weights.overrides = {{2, -3.25}};
  c.lengths = std::vector<double>(7, 1.5);
  c.alphas = {0.5, 2, 1};
  c.seed = 99;
  c.description = "round \"trip\"";
  EXPECT_EQ(parse_scenario(scenario_to_json(c)), c);

  const auto loaded = load_scenario(testing::scenario_path("grid4x4_two.json"));
  EXPECT_EQ(parse_scenario(scenario_to_json(loaded)), loaded);
}

TEST(ScenarioIo, Digest) {
  const auto a = load_scenario(testing::scenario_path("grid3x3_single.json"));
  const auto d = scenario_digest(a);
  EXPECT_EQ(d.size(), 16U);
  EXPECT_EQ(d.find_first_not_of("0123456789abcdef"), std::string::npos);
  EXPECT_EQ(scenario_digest(parse_scenario(scenario_to_json(a))), d);
  auto b = a;
  b.seed += 1;
  EXPECT_NE(scenario_digest(b), d);
}

TEST(ScenarioIo, UnknownKeyLine) {
  const auto e = parse_error(
      "{\n  \"rows\": 2,\n  \"cols\": 2,\n  \"robots\": 1,\n"
      "  \"endpoints\": [{\"source\": [0, 0], \"dest\": [1, 1]}],\n  \"colour\": 1\n}\n");
  EXPECT_EQ(e.line(), 6U);
  EXPECT_EQ(e.field(), "colour");
  EXPECT_EQ(std::string(e.what()).rfind("t.json:6: colour:", 0), 0U) << e.what();
}

TEST(ScenarioIo, OutOfBoundsEndpointLine) {
  const auto e = parse_error(
      "{\n  \"rows\": 2,\n  \"cols\": 2,\n  \"robots\": 2,\n  \"endpoints\": [\n"
      "    {\"source\": [0, 0], \"dest\": [1, 1]},\n"
      "    {\"source\": [5, 0], \"dest\": [1, 0]}\n  ]\n}\n");
  EXPECT_EQ(e.line(), 7U);
  EXPECT_EQ(e.field(), "endpoints[1].source");
}

TEST(ScenarioIo, TypeAndMissingErrors) {
  auto e = parse_error("{\n  \"rows\": \"two\",\n  \"cols\": 2,\n  \"robots\": 1,\n"
                       "  \"endpoints\": [{\"source\": [0, 0], \"dest\": [1, 1]}]\n}\n");
  EXPECT_EQ(e.line(), 2U);
  EXPECT_EQ(e.field(), "rows");

  e = parse_error("{\n  \"rows\": 2,\n  \"cols\": 2,\n  \"robots\": 1\n}\n");
  EXPECT_EQ(e.field(), "endpoints");

  e = parse_error("{\n  \"rows\": 2,\n  \"cols\": 2,\n  \"robots\": 2,\n"
                  "  \"endpoints\": [{\"source\": [0, 0], \"dest\": [1, 1]}]\n}\n");
  EXPECT_EQ(e.field(), "endpoints");

  e = parse_error("{ \"rows\": 2, ");
  EXPECT_GE(e.line(), 1U);

  EXPECT_THROW((void)load_scenario("/nonexistent/covplan.json"), ScenarioParseError);
}

}  // namespace
}  // namespace covplan
