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


#include "reslve/evaluation.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles/kappa_oracle.h"
#include "reslve/errors.h"
#include "support/random_instances.h"

namespace reslve {
namespace {

AmbiguousEntity Entity(std::vector<CandidateMeaning> candidates) {
  return AmbiguousEntity{"s", "u", WordClass::kNoun, std::move(candidates)};
}

TEST(EvaluationTest, SeededRandomIsReproducibleAndBounded) {
  SeededRandom a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    std::uint64_t x = a.Next();
    EXPECT_EQ(x, b.Next());
    differs = differs || x != c.Next();
  }
  EXPECT_TRUE(differs);
  SeededRandom r(1);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(r.Below(7), 7u);
  EXPECT_NE(MixSeed(1, "e001"), MixSeed(1, "e002"));
  EXPECT_NE(MixSeed(1, "e001"), MixSeed(2, "e001"));
}

TEST(EvaluationTest, BelowIsRoughlyUniform) {
  SeededRandom r(9);
  std::array<int, 5> counts{};
  for (int i = 0; i < 50000; ++i) ++counts[r.Below(5)];
  for (int c : counts) EXPECT_NEAR(c, 10000, 400);
}

TEST(EvaluationTest, PrecisionAtOneCounts) {
  std::vector<EntityRanking> r = {{"a", {"X", "Y"}}, {"b", {"Y"}}, {"c", {"Z"}}, {"d", {"X"}}};
  std::map<std::string, TopicId> gold = {{"a", "X"}, {"b", "Y"}, {"c", "Z"}, {"d", "Y"}};
  EXPECT_DOUBLE_EQ(PrecisionAtOne(r, gold), 0.75);
  gold["d"] = "X";
  EXPECT_DOUBLE_EQ(PrecisionAtOne(r, gold), 1.0);
  for (auto& [k, v] : gold) v = "none";
  EXPECT_DOUBLE_EQ(PrecisionAtOne(r, gold), 0.0);
  gold.erase("c");
  EXPECT_THROW(PrecisionAtOne(r, gold), InputError);
}

TEST(EvaluationTest, RandomCandidateRankIsSeededPermutation) {
  AmbiguousEntity e = Entity({{"A", 0.1, {}}, {"B", 0.2, {}}, {"C", 0.3, {}}, {"D", 0.4, {}}});
  auto first = RandomCandidateRank(e, 5);
  EXPECT_EQ(first, RandomCandidateRank(e, 5));
  std::set<TopicId> topics;
  for (const auto& c : first) topics.insert(c.topic);
  EXPECT_EQ(topics.size(), 4u);
  AmbiguousEntity single = Entity({{"A", 1.0, {}}});
  EXPECT_EQ(RandomCandidateRank(single, 3), single.candidates);
}

TEST(EvaluationTest, RandomCandidateTopIsUniform) {
  AmbiguousEntity e = Entity({{"A", 0, {}}, {"B", 0, {}}, {"C", 0, {}}});
  std::map<TopicId, int> tops;
  for (std::uint64_t s = 0; s < 30000; ++s) ++tops[RandomCandidateRank(e, s).front().topic];
  for (const auto& [t, n] : tops) EXPECT_NEAR(n, 10000, 400) << t;
}

TEST(EvaluationTest, PriorAndProviderBaselines) {
  AmbiguousEntity e = Entity({{"A", 0.2, 0.9}, {"B", 0.7, 0.1}, {"C", 0.1, {}}});
  EXPECT_EQ(PriorFrequencyBaseline(e).front().topic, "B");
  EXPECT_EQ(ProviderRank(e).front().topic, "A");
  AmbiguousEntity tied = Entity({{"Z", 0.5, {}}, {"M", 0.5, {}}});
  EXPECT_EQ(PriorFrequencyBaseline(tied).front().topic, "M");
}

TEST(EvaluationTest, RandomUserSelection) {
  std::vector<std::string> pool = {"ann", "bob", "cy"};
  for (std::uint64_t s = 0; s < 50; ++s) EXPECT_NE(SelectRandomUser(pool, "bob", s), "bob");
  EXPECT_EQ(SelectRandomUser(pool, "bob", 3), SelectRandomUser(pool, "bob", 3));
  std::vector<std::string> alone = {"ann"};
  EXPECT_THROW(SelectRandomUser(alone, "ann", 1), InputError);
  std::vector<std::string> twins = {"ann", "ann"};
  EXPECT_THROW(SelectRandomUser(twins, "ann", 1), InputError);
}

TEST(EvaluationTest, KappaPerfectAgreement) {
  std::vector<std::vector<std::string>> labels = {{"A", "A", "A"}, {"B", "B", "B"}};
  AgreementStats s = ComputeAgreement(labels);
  EXPECT_DOUBLE_EQ(s.observed, 1.0);
  EXPECT_DOUBLE_EQ(s.kappa, 1.0);
  // A single category everywhere: chance agreement is 1 as well.
  EXPECT_DOUBLE_EQ(ComputeAgreement({{"A", "A"}, {"A", "A"}}).kappa, 1.0);
}

TEST(EvaluationTest, KappaMatchesFormulaOracle) {
  // Items: AAA, AAB, BBB, ABC. By hand: P-bar 7/12, P_e 31/72, kappa 11/41.
  std::vector<std::vector<std::string>> labels = {
      {"A", "A", "A"}, {"A", "A", "B"}, {"B", "B", "B"}, {"A", "B", "C"}};
  AgreementStats s = ComputeAgreement(labels);
  EXPECT_NEAR(s.observed, 7.0 / 12.0, 1e-12);
  EXPECT_NEAR(s.expected, 31.0 / 72.0, 1e-12);
  EXPECT_NEAR(s.kappa, 11.0 / 41.0, 1e-12);
  double oracle = oracle::FleissKappa({{3, 0, 0}, {2, 1, 0}, {0, 3, 0}, {1, 1, 1}});
  EXPECT_NEAR(s.kappa, oracle, 1e-9);
}

TEST(EvaluationTest, KappaFourteenRaterTable) {
  // Ten items rated by fourteen raters into five categories; the published
  // value is 0.210 to three places.
  const int table[10][5] = {{0, 0, 0, 0, 14}, {0, 2, 6, 4, 2}, {0, 0, 3, 5, 6},
                            {0, 3, 9, 2, 0},  {2, 2, 8, 1, 1}, {7, 7, 0, 0, 0},
                            {3, 2, 6, 3, 0},  {2, 5, 3, 2, 2}, {6, 5, 2, 1, 0},
                            {0, 2, 2, 3, 7}};
  std::vector<std::vector<std::string>> labels;
  for (const auto& row : table) {
    std::vector<std::string> item;
    for (int c = 0; c < 5; ++c) item.insert(item.end(), row[c], std::string(1, 'a' + c));
    labels.push_back(item);
  }
  EXPECT_NEAR(ComputeAgreement(labels).kappa, 0.210, 5e-4);
}

TEST(EvaluationTest, KappaNearZeroForRandomLabels) {
  std::mt19937_64 rng(12);
  std::vector<std::vector<std::string>> labels(5000);
  for (auto& item : labels) {
    for (int k = 0; k < 3; ++k) item.push_back(rng() % 2 ? "yes" : "no");
  }
  EXPECT_LT(std::abs(ComputeAgreement(labels).kappa), 0.05);
  labels[0].pop_back();
  EXPECT_THROW(ComputeAgreement(labels), InputError);
  EXPECT_THROW(ComputeAgreement({}), InputError);
}

TEST(EvaluationTest, GoldParsingAndExclusions) {
  std::string text =
      "e1\tu1\ttwitter\ttweet\tann\tbass\tA=0.6,0.5 B=0.4\tA A A\tA\n"
      "e2\tu2\tflickr\ttag\tann\tbass\tA=0.6 B=0.4\tA B A\tA\n"
      "e3\tu3\tyoutube\ttitle\tann\tbass\tA=0.6 B=0.4\tnone none none\tnone\n"
      "e4\tu4\tyoutube\ttitle\tann\tbass\tA=0.6 B=0.4\tB B B\tA\n";
  auto gold = ParseGoldDataset(text);
  ASSERT_EQ(gold.size(), 4u);
  EXPECT_FALSE(gold[0].excluded);
  EXPECT_EQ(gold[0].entity.candidates[0].confidence, 0.5);
  EXPECT_EQ(gold[1].exclusion_reason, "annotators not unanimous");
  EXPECT_EQ(gold[2].exclusion_reason, "no correct sense");
  EXPECT_TRUE(gold[3].excluded);
  EXPECT_THROW(ParseGoldDataset("e1\tu\ttwitter\ttweet\tann\tb\tA=1\tC\tC\n"), InputError);
  EXPECT_THROW(ParseGoldDataset("e1\tu\ttwitter\ttweet\tann\tb\tA=1 A=0\tA\tA\n"), InputError);
  EXPECT_THROW(ParseGoldDataset(text + text), InputError);
}

TEST(EvaluationTest, AmbiguityStatsShape) {
  Utterance u;
  u.platform = Platform::kTwitter;
  u.kind = UtteranceKind::kTweet;
  u.raw = "bass and office tonight";
  AmbiguousEntity bass = Entity({{"A", 0.6, 0.8}, {"B", 0.4, {}}});
  AmbiguousEntity office = Entity({{"C", 1.0, {}}});
  bass.surface = "bass";
  office.surface = "office";
  AnnotatedText with{u, {bass, office}};
  AnnotatedText without{u, {}};
  Utterance foreign = u;
  foreign.non_english = true;
  std::vector<AnnotatedText> corpus = {with, without, AnnotatedText{foreign, {}}};
  AmbiguityReport r = ComputeAmbiguityStats(corpus);
  const AmbiguityGroup& g = r.groups.at({Platform::kTwitter, UtteranceKind::kTweet});
  EXPECT_EQ(g.texts, 2u);
  EXPECT_EQ(g.texts_with_ambiguous, 1u);
  EXPECT_EQ(g.entities, 2u);
  EXPECT_EQ(g.ambiguous_entities, 1u);
  EXPECT_EQ(g.length_histogram.at(20), 2u);
  EXPECT_EQ(r.non_english_texts, 1u);
  EXPECT_EQ(r.top_confidence_histogram[8], 1u);
  std::string text = FormatAmbiguityReport(r);
  EXPECT_NE(text.find("twitter\ttweet\t2\t1\t50.0%\t2\t1\t50.0%"), std::string::npos) << text;

  AmbiguityReport empty = ComputeAmbiguityStats({});
  EXPECT_TRUE(empty.groups.empty());
  EXPECT_EQ(empty.candidate_counts.entities, 0u);
}

class EvaluateDatasetTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::mt19937_64 rng(4);
    inst_ = testing::RandomRankingInstance(rng);
    while (inst_.entity.candidates.size() < 3) inst_ = testing::RandomRankingInstance(rng);
    models_["ann"] = BuildUserModel(inst_.user, inst_.edits, inst_.graph);
    std::vector<EditRecord> other = inst_.edits;
    for (auto& e : other) e.topic = inst_.graph.topics().begin()->first;
    models_["bob"] = BuildUserModel(inst_.user, other, inst_.graph);
    models_["cy"] = models_["ann"];
    for (int i = 0; i < 6; ++i) {
      GoldLabel g;
      g.entity_id = "e" + std::to_string(i);
      g.platform = i % 2 ? Platform::kFlickr : Platform::kTwitter;
      g.user = "ann";
      g.entity = inst_.entity;
      g.gold_topic = inst_.entity.candidates[static_cast<std::size_t>(i) % 3].topic;
      g.annotator_labels = {g.gold_topic, g.gold_topic, g.gold_topic};
      gold_.push_back(g);
    }
  }
  testing::RankingInstance inst_;
  std::map<std::string, UserInterestModel> models_;
  std::vector<GoldLabel> gold_;
};

TEST_F(EvaluateDatasetTest, GridHasEveryMethodAndConsistentSweep) {
  EvaluationOptions opts;
  EvalReport r = EvaluateDataset(gold_, models_, inst_.graph, opts);
  EXPECT_EQ(r.entities.size(), 6u);
  for (std::string_view m : kMethods) {
    EXPECT_EQ(r.overall.at(std::string(m)).total, 6u) << m;
  }
  ASSERT_EQ(r.sweep.size(), 11u);
  for (const auto& p : r.sweep) EXPECT_TRUE(p.consistent);
  ASSERT_TRUE(r.agreement.has_value());
  std::string grid = FormatPrecisionGrid(r);
  EXPECT_EQ(grid.substr(0, grid.find('\n')), "method\ttwitter\tflickr\tall");
  EXPECT_NE(FormatEvalReportJson(r).find("\"p_at_1\""), std::string::npos);
}

TEST_F(EvaluateDatasetTest, SeedChangeTouchesOnlyRandomBaselines) {
  EvaluationOptions a;
  EvaluationOptions b;
  b.rc_seed = 1001;
  b.ru_seed = 2002;
  EvalReport ra = EvaluateDataset(gold_, models_, inst_.graph, a);
  EvalReport rb = EvaluateDataset(gold_, models_, inst_.graph, b);
  for (std::size_t i = 0; i < ra.entities.size(); ++i) {
    for (const char* m : {"RESLVE", "PF", "PROVIDER"}) {
      EXPECT_EQ(ra.entities[i].rankings.at(m), rb.entities[i].rankings.at(m));
    }
  }
}

TEST_F(EvaluateDatasetTest, ExcludedAndModelessEntitiesAreReported) {
  gold_[0].excluded = true;
  gold_[1].user = "nobody";
  EvalReport r = EvaluateDataset(gold_, models_, inst_.graph, EvaluationOptions{});
  EXPECT_EQ(r.excluded, 1u);
  ASSERT_EQ(r.skipped.size(), 1u);
  EXPECT_EQ(r.entities.size(), 4u);
}

}  // namespace
}  // namespace reslve
