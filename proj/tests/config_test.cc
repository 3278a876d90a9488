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


#include "reslve/config.h"

#include <gtest/gtest.h>

#include "reslve/errors.h"

namespace reslve {
namespace {

TEST(ConfigTest, EmptyObjectGivesDefaults) {
  PipelineConfig c = ParseConfig("{}");
  EXPECT_EQ(c.alpha, 0.5);
  EXPECT_EQ(c.max_depth, 4);
  EXPECT_EQ(c.min_nonstop_words, 100u);
  EXPECT_EQ(c.min_utterances, 100u);
  EXPECT_EQ(c.min_edits, 100u);
  EXPECT_EQ(c.pruning.min_document_frequency, 2u);
  EXPECT_EQ(c.pruning.max_document_fraction, 0.9);
  EXPECT_EQ(c.frequency, FrequencyMode::kEdits);
  EXPECT_EQ(c.ingest.mode, IngestMode::kReplay);
}

TEST(ConfigTest, SerializeRoundTripsAndIsCanonical) {
  PipelineConfig c = ParseConfig(R"({
    "alpha": 0.3, "frequency": "articles", "seeds": {"rc": 7},
    "paths": {"graph": "g.tsv"},
    "ingest": {"mode": "record", "accounts": [{"platform": "twitter", "username": "ann"}]}
  })");
  std::string text = SerializeConfig(c);
  PipelineConfig again = ParseConfig(text);
  EXPECT_EQ(SerializeConfig(again), text);
  EXPECT_EQ(again.alpha, 0.3);
  EXPECT_EQ(again.rc_seed, 7u);
  EXPECT_EQ(again.ru_seed, 2u);
  EXPECT_EQ(again.frequency, FrequencyMode::kArticles);
  ASSERT_EQ(again.ingest.accounts.size(), 1u);
  EXPECT_EQ(again.ingest.accounts[0].platform, Platform::kTwitter);
}

TEST(ConfigTest, RelativePathsResolveAgainstConfigDirectory) {
  PipelineConfig c = ParseConfig(R"({"paths": {"graph": "g.tsv"}})", "/data/run");
  EXPECT_EQ(c.Resolve(c.graph), std::filesystem::path("/data/run/g.tsv"));
  EXPECT_EQ(c.Resolve("/abs/x"), std::filesystem::path("/abs/x"));
}

TEST(ConfigTest, RejectsInvalidValues) {
  EXPECT_THROW(ParseConfig(R"({"alpha": 1.5})"), ConfigError);
  EXPECT_THROW(ParseConfig(R"({"alpha": "high"})"), ConfigError);
  EXPECT_THROW(ParseConfig(R"({"max_depth": 0})"), ConfigError);
  EXPECT_THROW(ParseConfig(R"({"colour": 1})"), ConfigError);
  EXPECT_THROW(ParseConfig(R"({"prune": {"max_document_fraction": 0}})"), ConfigError);
  EXPECT_THROW(ParseConfig(R"({"frequency": "sometimes"})"), ConfigError);
  EXPECT_THROW(ParseConfig(R"({"ingest": {"mode": "psychic"}})"), ConfigError);
  EXPECT_THROW(ParseConfig("{"), ConfigError);
  EXPECT_THROW(LoadConfig("/nonexistent/config.json"), InputError);
}

TEST(ConfigTest, RankingOptionsFollowConfig) {
  PipelineConfig c = ParseConfig(R"({"alpha": 0.2, "max_depth": 3, "prune": {"min_document_frequency": 1}})");
  RankingOptions r = c.Ranking();
  EXPECT_EQ(r.alpha, 0.2);
  EXPECT_EQ(r.max_depth, 3);
  EXPECT_EQ(r.pruning.min_document_frequency, 1u);
}

}  // namespace
}  // namespace reslve
