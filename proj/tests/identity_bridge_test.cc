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


#include "reslve/identity_bridge.h"

#include <gtest/gtest.h>

#include "reslve/errors.h"

namespace reslve {
namespace {

TEST(IdentityBridgeTest, MatchingRules) {
  std::set<std::string> kb = {"Alice", "Bob_Smith"};
  std::vector<SocialAccount> social = {{Platform::kTwitter, "alice"},
                                       {Platform::kTwitter, "alice42"},
                                       {Platform::kYouTube, "bob smith"},
                                       {Platform::kYouTube, "BOB_SMITH"}};
  auto loose = MatchUsernames(social, kb, MatchMode::kCaseInsensitive);
  EXPECT_TRUE(loose[0].matched);
  EXPECT_EQ(loose[0].kb_user, "Alice");
  EXPECT_FALSE(loose[1].matched);
  EXPECT_FALSE(loose[2].matched);  // spaces are not underscores under casefold
  EXPECT_TRUE(loose[3].matched);

  auto strict = MatchUsernames(social, kb, MatchMode::kStrict);
  EXPECT_TRUE(strict[0].matched);  // first letter capitalized by the KB
  EXPECT_FALSE(strict[2].matched);   // "Bob_smith" differs after the first letter
  EXPECT_FALSE(strict[3].matched);
  std::vector<SocialAccount> spaced = {{Platform::kYouTube, "Bob Smith"}};
  EXPECT_TRUE(MatchUsernames(spaced, kb, MatchMode::kStrict)[0].matched);
}

TEST(IdentityBridgeTest, NormalForms) {
  EXPECT_EQ(NormalizeUsername(" Alice ", MatchMode::kCaseInsensitive), "alice");
  EXPECT_EQ(NormalizeUsername("alice b", MatchMode::kStrict), "Alice_b");
  EXPECT_TRUE(UsernamesMatch("alice", "Alice", MatchMode::kStrict));
  EXPECT_FALSE(UsernamesMatch("aLice", "Alice", MatchMode::kStrict));
}

TEST(IdentityBridgeTest, ReportPercentagesFromCounts) {
  std::vector<BridgeResult> results;
  for (int i = 0; i < 479; ++i) {
    BridgeResult r;
    r.platform = Platform::kTwitter;
    r.matched = i < 221;
    results.push_back(r);
  }
  BridgeReport report = MakeBridgeReport(results);
  EXPECT_EQ(report.at(Platform::kTwitter).matched, 221u);
  std::string text = FormatBridgeReport(report);
  EXPECT_NE(text.find("twitter\t479\t221\t46.1%"), std::string::npos) << text;
  EXPECT_TRUE(MakeBridgeReport({}).empty());
}

TEST(IdentityBridgeTest, AllMatchedIsHundredPercent) {
  std::vector<BridgeResult> results(3);
  for (auto& r : results) r.matched = true;
  EXPECT_DOUBLE_EQ(MakeBridgeReport(results).at(Platform::kGeneric).MatchPercent(), 100.0);
}

TEST(IdentityBridgeTest, VerificationLabelsCountOnlyMatches) {
  VerificationLabels labels = VerificationLabels::Parse(
      "alice\ttwitter\tsame-person\ncarol\ttwitter\tdifferent-person\n");
  std::vector<SocialAccount> social = {{Platform::kTwitter, "alice"},
                                       {Platform::kTwitter, "carol"}};
  auto results = MatchUsernames(social, {"Alice"}, MatchMode::kCaseInsensitive, &labels);
  EXPECT_EQ(results[0].verification, Verification::kSamePerson);
  EXPECT_EQ(results[1].verification, Verification::kDifferentPerson);
  auto stats = MakeBridgeReport(results).at(Platform::kTwitter);
  EXPECT_EQ(stats.same_person, 1u);
  EXPECT_EQ(stats.different_person, 0u);
  EXPECT_THROW(VerificationLabels::Parse("a\ttwitter\tmaybe\n"), InputError);
  EXPECT_THROW(ParseMatchMode("fuzzy"), ConfigError);
}

}  // namespace
}  // namespace reslve
