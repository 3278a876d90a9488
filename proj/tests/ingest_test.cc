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


#include "reslve/ingest.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <json.hpp>

#include "reslve/commands.h"
#include "reslve/config.h"
#include "reslve/errors.h"
#include "reslve/graph_io.h"
#include "reslve/tsv.h"
#include "support/fake_service.h"

namespace reslve {
namespace {

const std::filesystem::path kIngestDir = RESLVE_TEST_DATA_DIR "/ingest";
const char* kOutputs[] = {"graph.tsv", "descriptions.jsonl", "edits.tsv", "utterances.tsv",
                          "exclusions.tsv"};

std::filesystem::path FreshDir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("reslve_ingest_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

IngestResult ReplayFixture() {
  PipelineConfig config = LoadConfig(kIngestDir / "config.json");
  auto transport = MakeReplayTransport(Cassette::Load(kIngestDir / "cassette.json"));
  return Ingest(config, *transport);
}

TEST(IngestTest, ReplayCollectsActiveAccountAndLogsExclusions) {
  IngestResult r = ReplayFixture();
  EXPECT_EQ(r.completed.size(), 1u);
  ASSERT_EQ(r.exclusions.size(), 2u);
  std::string log = FormatExclusions(r.exclusions);
  EXPECT_NE(log.find("quietuser"), std::string::npos);
  EXPECT_NE(log.find("below threshold"), std::string::npos);
  EXPECT_NE(log.find("identity not bridged"), std::string::npos);
  EXPECT_FALSE(r.edits.empty());
  for (const EditRecord& e : r.edits) EXPECT_EQ(e.user, "Officefan");
  EXPECT_FALSE(r.utterances.empty());
  KnowledgeGraph g = ParseGraphSnapshot(r.graph, r.descriptions);
  EXPECT_TRUE(g.HasTopic("The_Office_(U.S._season_8)"));
  bool missing_warned = false;
  for (const std::string& w : r.warnings) missing_warned |= w.find("Deleted article") != std::string::npos;
  EXPECT_TRUE(missing_warned);
}

TEST(IngestTest, ReplayIsDeterministic) {
  IngestResult a = ReplayFixture();
  IngestResult b = ReplayFixture();
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.descriptions, b.descriptions);
  EXPECT_EQ(FormatEditHistory(a.edits), FormatEditHistory(b.edits));
  EXPECT_EQ(FormatUtteranceCorpus(a.utterances), FormatUtteranceCorpus(b.utterances));
}

TEST(IngestTest, NoAccountsGivesEmptySnapshotAndWarning) {
  PipelineConfig config = ParseConfig("{}");
  auto transport = MakeReplayTransport(Cassette{});
  IngestResult r = Ingest(config, *transport);
  EXPECT_TRUE(r.graph.empty());
  EXPECT_TRUE(r.edits.empty());
  ASSERT_EQ(r.warnings.size(), 1u);
}

TEST(IngestTest, TitleToId) {
  EXPECT_EQ(TitleToId("Category:The Office (U.S. TV series)"), "Category:The_Office_(U.S._TV_series)");
}

class RecordModeTest : public ::testing::Test {
 protected:
  void SetUp() override {
    service_ = std::make_unique<testing::FakeService>(
        Cassette::Load(kIngestDir / "cassette.json"),
        std::map<std::string, std::string>{{"wiki", "https://wiki.example/w/api.php"},
                                           {"social", "https://social.example"}});
    work_ = FreshDir(::testing::UnitTest::GetInstance()->current_test_info()->name());
    nlohmann::json j = nlohmann::json::parse(ReadFile(kIngestDir / "config.json"));
    j["ingest"]["mode"] = "record";
    j["ingest"]["wiki_endpoint"] = service_->Url("wiki");
    j["ingest"]["social_endpoint"] = service_->Url("social");
    j["ingest"]["cassette"] = (work_ / "recorded.json").string();
    config_ = ParseConfig(j.dump(), work_);

    PipelineConfig replay = LoadConfig(kIngestDir / "config.json");
    RunIngest(replay, IngestArgs{std::nullopt, work_ / "expected"});
  }
  void TearDown() override { std::filesystem::remove_all(work_); }

  void ExpectSameOutputs(const std::filesystem::path& dir) {
    for (const char* name : kOutputs) {
      EXPECT_EQ(ReadFile(dir / name), ReadFile(work_ / "expected" / name)) << name;
    }
  }

  std::unique_ptr<testing::FakeService> service_;
  std::filesystem::path work_;
  PipelineConfig config_;
};

TEST_F(RecordModeTest, RecordsThenServesFromCache) {
  RunIngest(config_, IngestArgs{std::nullopt, work_ / "first"});
  ExpectSameOutputs(work_ / "first");
  const int first_hits = service_->hits();
  EXPECT_GT(first_hits, 0);
  EXPECT_EQ(Cassette::Load(work_ / "recorded.json").size(),
            Cassette::Load(kIngestDir / "cassette.json").size());

  RunIngest(config_, IngestArgs{std::nullopt, work_ / "second"});
  EXPECT_EQ(service_->hits(), first_hits);  // everything came from the cassette
  ExpectSameOutputs(work_ / "second");

  // The recording replays offline.
  RunIngest(config_, IngestArgs{IngestMode::kReplay, work_ / "third"});
  ExpectSameOutputs(work_ / "third");
}

TEST_F(RecordModeTest, FailureLeavesCheckpointAndRerunResumes) {
  service_->SetFailure([](const std::string& key) {
    return key.find("Michael%20Scott") != std::string::npos ? 503 : 200;
  });
  const auto out = work_ / "out";
  try {
    RunIngest(config_, IngestArgs{std::nullopt, out});
    FAIL() << "expected ServiceError";
  } catch (const ServiceError& e) {
    EXPECT_TRUE(e.retriable());
    EXPECT_NE(std::string(e.what()).find("rerun"), std::string::npos) << e.what();
  }
  ASSERT_TRUE(std::filesystem::exists(out / "ingest.checkpoint"));
  EXPECT_NE(ReadFile(out / "ingest.checkpoint").find("officefan"), std::string::npos);

  service_->SetFailure(nullptr);
  std::string summary = RunIngest(config_, IngestArgs{std::nullopt, out});
  EXPECT_NE(summary.find("resuming"), std::string::npos);
  EXPECT_FALSE(std::filesystem::exists(out / "ingest.checkpoint"));
  // Every recorded response was fetched once, plus the failed attempt.
  const int recorded = static_cast<int>(Cassette::Load(kIngestDir / "cassette.json").size());
  EXPECT_EQ(service_->hits(), recorded + 1);
  ExpectSameOutputs(out);
}

}  // namespace
}  // namespace reslve
