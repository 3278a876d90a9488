// Copyright 2026 The reslve Authors.
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


#include "reslve/commands.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <json.hpp>

#include "reslve/config.h"
#include "reslve/errors.h"
#include "reslve/tsv.h"

namespace reslve {
namespace {

const std::filesystem::path kFixture = RESLVE_TEST_DATA_DIR "/fixture";

class CommandsTest : public ::testing::Test {
 protected:
  void SetUp() override {
    work_ = std::filesystem::temp_directory_path() /
            ("reslve_cmd_" +
             std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::remove_all(work_);
    std::filesystem::create_directories(work_);
    config_ = LoadConfig(kFixture / "config.json");
    config_.output = work_.string();
  }
  void TearDown() override { std::filesystem::remove_all(work_); }

  std::vector<nlohmann::json> ReadJsonl(const std::filesystem::path& path) {
    std::vector<nlohmann::json> rows;
    ForEachLine(ReadFile(path), [&](std::size_t, std::string_view line) {
      rows.push_back(nlohmann::json::parse(line));
    });
    return rows;
  }

  std::filesystem::path work_;
  PipelineConfig config_;
};

TEST_F(CommandsTest, OfficeResolvesToEditedSeries) {
  RunResolve(config_, ResolveArgs{"officefan", Platform::kTwitter, {}, work_ / "r.jsonl"});
  bool seen = false;
  for (const auto& row : ReadJsonl(work_ / "r.jsonl")) {
    if (row["surface"] != "office") continue;
    seen = true;
    EXPECT_EQ(row["ranking"][0][0], "The_Office_(U.S._TV_series)");
  }
  EXPECT_TRUE(seen);
}

TEST_F(CommandsTest, ResolveIsByteDeterministic) {
  RunResolve(config_, ResolveArgs{"coder", Platform::kYouTube, {}, work_ / "a.jsonl"});
  RunResolve(config_, ResolveArgs{"coder", Platform::kYouTube, {}, work_ / "b.jsonl"});
  EXPECT_FALSE(ReadFile(work_ / "a.jsonl").empty());
  EXPECT_EQ(ReadFile(work_ / "a.jsonl"), ReadFile(work_ / "b.jsonl"));
}

TEST_F(CommandsTest, UtteranceWithoutEntitiesGivesEmptyOutput) {
  WriteFileAtomic(work_ / "u.tsv", "x1\ttwitter\ttweet\tofficefan\tquiet day at home\n");
  std::string summary =
      RunResolve(config_, ResolveArgs{"officefan", Platform::kTwitter, work_ / "u.tsv", work_ / "r.jsonl"});
  EXPECT_EQ(ReadFile(work_ / "r.jsonl"), "");
  EXPECT_NE(summary.find("ranked entities: 0"), std::string::npos) << summary;
}

TEST_F(CommandsTest, UnbridgedUserIsRejected) {
  EXPECT_THROW(RunResolve(config_, ResolveArgs{"ghost", Platform::kTwitter, {}, work_ / "r.jsonl"}),
               IdentityNotBridgedError);
}

TEST_F(CommandsTest, BuildModelIsDeterministic) {
  RunBuildModel(config_, BuildModelArgs{"officefan", Platform::kTwitter, work_ / "a.json"});
  RunBuildModel(config_, BuildModelArgs{"Officefan", std::nullopt, work_ / "b.json"});
  EXPECT_EQ(ReadFile(work_ / "a.json"), ReadFile(work_ / "b.json"));
  EXPECT_THROW(RunBuildModel(config_, BuildModelArgs{"Nobody", std::nullopt, work_ / "c.json"}),
               InputError);
}

TEST_F(CommandsTest, EvaluateWritesGridAndSeedsTouchOnlyRandomColumns) {
  RunEvaluate(config_, EvaluateArgs{work_ / "a"});
  for (const char* f : {"precision.tsv", "alpha_sweep.tsv", "report.json", "ambiguity.tsv"}) {
    EXPECT_TRUE(std::filesystem::exists(work_ / "a" / f)) << f;
  }
  std::string grid = ReadFile(work_ / "a" / "precision.tsv");
  for (const char* m : {"RESLVE\t", "RC\t", "PF\t", "RU\t", "PROVIDER\t"}) {
    EXPECT_NE(grid.find(std::string("\n") + m), std::string::npos) << m;
  }

  PipelineConfig reseeded = config_;
  reseeded.rc_seed = 99;
  reseeded.ru_seed = 123;
  RunEvaluate(reseeded, EvaluateArgs{work_ / "b"});
  auto a = nlohmann::json::parse(ReadFile(work_ / "a" / "report.json"));
  auto b = nlohmann::json::parse(ReadFile(work_ / "b" / "report.json"));
  ASSERT_EQ(a["entities"].size(), b["entities"].size());
  bool random_changed = false;
  for (std::size_t i = 0; i < a["entities"].size(); ++i) {
    const auto& ra = a["entities"][i]["rankings"];
    const auto& rb = b["entities"][i]["rankings"];
    for (const char* m : {"RESLVE", "PF", "PROVIDER"}) EXPECT_EQ(ra[m], rb[m]) << m;
    random_changed |= ra["RC"] != rb["RC"] || ra["RU"] != rb["RU"];
  }
  EXPECT_TRUE(random_changed);
}

TEST_F(CommandsTest, SweepStatsAndBridgeRun) {
  std::string sweep = RunSweepAlpha(config_, EvaluateArgs{work_});
  EXPECT_EQ(std::count(sweep.begin(), sweep.end(), '\n'), 12);
  EXPECT_EQ(sweep.find("\tno\n"), std::string::npos);
  EXPECT_NE(RunStats(config_, StatsArgs{work_ / "stats.tsv"}).find("# ambiguity"),
            std::string::npos);
  std::string bridge = RunBridge(config_, BridgeArgs{MatchMode::kCaseInsensitive, work_ / "b.tsv"});
  EXPECT_NE(bridge.find("twitter"), std::string::npos);
}

}  // namespace
}  // namespace reslve
