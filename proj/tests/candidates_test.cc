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


#include "reslve/candidates.h"

#include <gtest/gtest.h>

#include "reslve/errors.h"

namespace reslve {
namespace {

constexpr std::string_view kTable =
    "# surface\tclass\tcandidates\n"
    "office\tnoun\tOffice=0.62,0.55\tThe_Office_(U.S._TV_series)=0.28\n"
    "new york\tentity\tNew_York_City=0.7\tNew_York_(state)=0.3\n"
    "new\tother\tNew=1.0\tNew_(film)=0.0\n"
    "sun\tnoun\tSun=1.0\n";

Utterance Tokens(std::vector<std::string> tokens) {
  Utterance u;
  u.id = "u1";
  u.normalized = std::move(tokens);
  return u;
}

TEST(CandidatesTest, LongestMatchWins) {
  auto provider = FixtureCandidateProvider::Parse(kTable);
  auto entities = DetectEntities(Tokens({"MENTION", "new", "york", "office"}), provider);
  ASSERT_EQ(entities.size(), 2u);
  EXPECT_EQ(entities[0].surface, "new york");
  EXPECT_EQ(entities[0].utterance_id, "u1");
  EXPECT_EQ(entities[1].surface, "office");
  ASSERT_TRUE(entities[1].candidates[0].confidence.has_value());
  EXPECT_FALSE(entities[1].candidates[1].confidence.has_value());
}

TEST(CandidatesTest, NoMentionsGivesEmpty) {
  auto provider = FixtureCandidateProvider::Parse(kTable);
  EXPECT_TRUE(DetectEntities(Tokens({"quiet", "day"}), provider).empty());
  EXPECT_TRUE(DetectEntities(Tokens({}), provider).empty());
}

TEST(CandidatesTest, FiltersDropInvalidEntities) {
  auto provider = FixtureCandidateProvider::Parse(kTable);
  auto entities = FilterEntities(
      DetectEntities(Tokens({"new", "sun", "office"}), provider));
  // "new" is not a noun class, "sun" has a single meaning.
  ASSERT_EQ(entities.size(), 1u);
  EXPECT_EQ(entities[0].surface, "office");

  AmbiguousEntity single_char{"x", "u", WordClass::kNoun, {{"A", 0.5, {}}, {"B", 0.5, {}}}};
  EXPECT_FALSE(PassesEntityFilters(single_char));
  AmbiguousEntity punct{"!!", "u", WordClass::kNoun, single_char.candidates};
  EXPECT_FALSE(PassesEntityFilters(punct));
  AmbiguousEntity foreign{"\xe6\x97\xa5\xe6\x9c\xac", "u", WordClass::kNamedEntity,
                          single_char.candidates};
  EXPECT_FALSE(PassesEntityFilters(foreign));
}

TEST(CandidatesTest, FilterIsIdempotent) {
  auto provider = FixtureCandidateProvider::Parse(kTable);
  auto once = FilterEntities(DetectEntities(Tokens({"new", "york", "office", "sun"}), provider));
  auto twice = FilterEntities(once);
  ASSERT_EQ(once.size(), twice.size());
  for (std::size_t i = 0; i < once.size(); ++i) EXPECT_EQ(once[i].surface, twice[i].surface);
}

TEST(CandidatesTest, PriorRankBreaksTiesByTopic) {
  AmbiguousEntity e{"bass", "u", WordClass::kNoun,
                    {{"Bass_(fish)", 0.4, {}}, {"Bass_guitar", 0.6, {}}, {"Axe", 0.4, {}}}};
  auto ranked = PriorFrequencyRank(e);
  EXPECT_EQ(ranked[0].topic, "Bass_guitar");
  EXPECT_EQ(ranked[1].topic, "Axe");
  EXPECT_EQ(ranked[2].topic, "Bass_(fish)");
}

TEST(CandidatesTest, ParseRejectsBadRows) {
  EXPECT_THROW(FixtureCandidateProvider::Parse("a\tnoun\tX=1.5\n"), InputError);
  EXPECT_THROW(FixtureCandidateProvider::Parse("a\tnoun\tX\n"), InputError);
  EXPECT_THROW(FixtureCandidateProvider::Parse("a\tverb\tX=0.5\n"), InputError);
  EXPECT_THROW(FixtureCandidateProvider::Parse("a\tnoun\tX=0.5\nA\tnoun\tY=0.5\n"), InputError);
  EXPECT_THROW(FixtureCandidateProvider::Parse("a\n"), InputError);
}

TEST(CandidatesTest, PriorsStayInUnitInterval) {
  auto provider = FixtureCandidateProvider::Load(RESLVE_TEST_DATA_DIR "/fixture/candidates.tsv");
  EXPECT_GT(provider.size(), 10u);
}

TEST(CandidatesTest, CountStats) {
  std::vector<AmbiguousEntity> es(4);
  for (std::size_t i = 0; i < es.size(); ++i) es[i].candidates.resize(i + 2);
  CandidateCountStats s = ComputeCandidateCountStats(es);
  EXPECT_EQ(s.min, 2u);
  EXPECT_EQ(s.max, 5u);
  EXPECT_DOUBLE_EQ(s.mean, 3.5);
  EXPECT_DOUBLE_EQ(s.median, 3.5);
  EXPECT_EQ(ComputeCandidateCountStats({}).entities, 0u);
}

}  // namespace
}  // namespace reslve
