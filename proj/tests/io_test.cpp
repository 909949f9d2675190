// Copyright 2026 The midrange Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "midrange/io.hpp"

#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "midrange/selftest.hpp"

namespace midrange {
namespace {

TEST(DrawingJson, RoundTripIsExactAcrossSeeds) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SeededStream stream(seed, 3);
    const SphericalDrawing original = build_threshold_drawing(stream, 40, 0.9);
    const std::string text = to_json(original).dump();
    const SphericalDrawing back = drawing_from_json(Json::parse(text));
    EXPECT_EQ(back, original) << "seed " << seed;
    EXPECT_EQ(to_json(back).dump(), text);
  }
}

TEST(DrawingJson, CarriesFormatAndKeys) {
  SeededStream stream(1, 0);
  const Json j = to_json(build_threshold_drawing(stream, 5, 2.0));
  EXPECT_EQ(j.at("format"), 1);
  EXPECT_EQ(j.at("n"), 5);
  EXPECT_EQ(j.at("seed"), 1);
  EXPECT_EQ(j.at("vertices").size(), 5u);
  for (const char* key : {"d", "edges"}) EXPECT_TRUE(j.contains(key)) << key;
}

Json small_drawing() {
  return Json::parse(R"({"format":1,"n":3,"d":2.0,"seed":0,
      "vertices":[[1,0,0],[0,1,0],[0,0,1]],"edges":[[0,1],[1,2]]})");
}

TEST(DrawingJson, AcceptsMinimalDocument) {
  const SphericalDrawing d = drawing_from_json(small_drawing());
  EXPECT_EQ(d.n(), 3u);
  EXPECT_EQ(d.e(), 2u);
  EXPECT_EQ(d.stream_index, 0u);
}

TEST(DrawingJson, RejectsMalformedInput) {
  auto expect_reject = [](Json j, const char* label) {
    EXPECT_THROW(drawing_from_json(j), FormatError) << label;
  };
  Json j = small_drawing();
  j.erase("format");
  expect_reject(j, "no format");
  j = small_drawing();
  j["format"] = 2;
  expect_reject(j, "future format");
  j = small_drawing();
  j["n"] = 4;
  expect_reject(j, "n mismatch");
  j = small_drawing();
  j["edges"].push_back({2, 2});
  expect_reject(j, "self loop");
  j = small_drawing();
  j["edges"].push_back({0, 3});
  expect_reject(j, "index out of range");
  j = small_drawing();
  j["edges"].push_back({1, 0});
  expect_reject(j, "reversed order");
  j = small_drawing();
  j["edges"].push_back({0, 1});
  expect_reject(j, "duplicate");
  j = small_drawing();
  j["vertices"][0] = {2, 0, 0};
  expect_reject(j, "non-unit vertex");
  j = small_drawing();
  j["vertices"][2] = {-1, 0, 0};
  j["edges"] = Json::parse("[[0,2]]");
  expect_reject(j, "antipodal edge");
  j = small_drawing();
  j["vertices"] = "none";
  expect_reject(j, "wrong type");
  expect_reject(Json::array(), "not an object");
}

TEST(ReportJson, RoundTripAndConsistency) {
  const CrossingReport r = CrossingReport::make(60, 1770, 182863, 0);
  const CrossingReport back = report_from_json(Json::parse(to_json(r).dump()));
  EXPECT_EQ(back.n, r.n);
  EXPECT_EQ(back.e, r.e);
  EXPECT_EQ(back.cr, r.cr);
  EXPECT_EQ(back.ratio, r.ratio);
  Json tampered = to_json(r);
  tampered["ratio"] = 0.5;
  EXPECT_THROW(report_from_json(tampered), FormatError);
}

TEST(SummaryJson, DrawingModeSchema) {
  ExperimentConfig c;
  c.n = 30;
  c.d = 1.0;
  c.trials = 4;
  const ExperimentSummary s = run_drawing_ratio(c);
  const Json j = Json::parse(to_json(s).dump());
  EXPECT_EQ(j.at("format"), 1);
  EXPECT_EQ(j.at("config").at("mode"), "drawing_ratio");
  EXPECT_EQ(j.at("config").at("seed"), 0);
  EXPECT_EQ(j.at("per_trial").size(), 4u);
  EXPECT_EQ(j.at("samples").get<std::uint64_t>() + j.at("skipped_trials").get<std::uint64_t>(), 4u);
  EXPECT_DOUBLE_EQ(j.at("mean").get<double>(), s.mean);
}

TEST(SummaryJson, ZeroSpreadWritesNullZScore) {
  ExperimentConfig c;
  c.mode = ExperimentMode::kCompleteGraph;
  c.n = 4;
  c.trials = 1;
  const Json j = to_json(run_complete_graph(c));
  EXPECT_TRUE(j.at("z_score").is_null());
}

TEST(SummaryCsv, DrawingModeRows) {
  ExperimentConfig c;
  c.n = 20;
  c.d = 1.2;
  c.trials = 3;
  const ExperimentSummary s = run_drawing_ratio(c);
  std::ostringstream os;
  write_csv(os, s, Json{{"command", "simulate"}, {"seed", 0}});
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "# command=\"simulate\"");
  std::getline(in, line);
  EXPECT_EQ(line, "# seed=0");
  std::getline(in, line);
  EXPECT_EQ(line, "format_version,trial,n,e,cr,ratio,degeneracies");
  int rows = 0;
  while (std::getline(in, line)) {
    EXPECT_EQ(line.rfind("1," + std::to_string(rows) + ",20,", 0), 0u) << line;
    ++rows;
  }
  EXPECT_EQ(rows, 3);
}

TEST(SummaryCsv, PairModeRowsCoverAllTrials) {
  ExperimentConfig c;
  c.mode = ExperimentMode::kPairProbability;
  c.d = 2.0;
  c.trials = kPairBlockSize + 10;
  const ExperimentSummary s = run_pair_probability(c);
  std::ostringstream os;
  write_csv(os, s, Json::object());
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "format_version,block,trials,successes");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("1,0," + std::to_string(kPairBlockSize) + ",", 0), 0u);
  std::getline(in, line);
  EXPECT_EQ(line.rfind("1,1,10,", 0), 0u);
  EXPECT_FALSE(std::getline(in, line));
}

TEST(SelfTest, AllChecksPass) {
  for (const SelfTestCheck& check : run_selftest()) EXPECT_TRUE(check.passed) << check.name << ": " << check.detail;
}

}  // namespace
}  // namespace midrange
