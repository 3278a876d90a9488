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


#include "reslve/graph_io.h"

#include <gtest/gtest.h>

#include <filesystem>

#include "reslve/errors.h"
#include "reslve/tsv.h"

namespace reslve {
namespace {

constexpr std::string_view kSmall =
    "# comment\n"
    "C Category:Music\n"
    "C Category:Rock Category:Music\n"
    "\n"
    "T Bass_guitar Category:Rock Category:Music\n";

TEST(GraphIoTest, ParsesRecordsAndSortsEdges) {
  KnowledgeGraph g = ParseGraphSnapshot(kSmall);
  ASSERT_TRUE(g.HasTopic("Bass_guitar"));
  EXPECT_EQ(g.FindTopic("Bass_guitar")->categories,
            (std::vector<CategoryId>{"Category:Music", "Category:Rock"}));
  EXPECT_EQ(g.FindCategory("Category:Rock")->parents,
            std::vector<CategoryId>{"Category:Music"});
}

TEST(GraphIoTest, FormatRoundTrips) {
  KnowledgeGraph g = ParseGraphSnapshot(kSmall, R"({"id":"Bass_guitar","text":"Four strings."})");
  std::string text = FormatGraphSnapshot(g);
  std::string desc = FormatDescriptions(g);
  KnowledgeGraph again = ParseGraphSnapshot(text, desc);
  EXPECT_EQ(FormatGraphSnapshot(again), text);
  EXPECT_EQ(FormatDescriptions(again), desc);
  EXPECT_EQ(again.FindTopic("Bass_guitar")->description, "Four strings.");
}

TEST(GraphIoTest, DanglingReferenceNamesLine) {
  try {
    ParseGraphSnapshot("C a\nT t a b\n");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(GraphIoTest, MalformedInputsAreInputErrors) {
  EXPECT_THROW(ParseGraphSnapshot("X a\n"), InputError);
  EXPECT_THROW(ParseGraphSnapshot("C\n"), InputError);
  EXPECT_THROW(ParseGraphSnapshot("C a\nC a\n"), InputError);
  EXPECT_THROW(ParseGraphSnapshot("C a\nT t a\n", "{\"id\":\"zzz\",\"text\":\"x\"}"), InputError);
  EXPECT_THROW(ParseGraphSnapshot("C a\nT t a\n", "not json"), InputError);
}

TEST(GraphIoTest, LoadsShippedFixture) {
  const std::filesystem::path dir = RESLVE_TEST_DATA_DIR "/fixture";
  KnowledgeGraph g = LoadGraphSnapshot(dir / "graph.tsv", dir / "descriptions.jsonl");
  EXPECT_GT(g.topics().size(), 50u);
  EXPECT_FALSE(g.FindTopic("The_Office_(U.S._TV_series)")->description.empty());
}

}  // namespace
}  // namespace reslve
