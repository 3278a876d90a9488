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

#ifndef RESLVE_IDENTITY_BRIDGE_H_
#define RESLVE_IDENTITY_BRIDGE_H_

// Links social-platform usernames to knowledge-base usernames by string
// matching, and reports match rates per platform.

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reslve/text_pipeline.h"

namespace reslve {

enum class MatchMode {
  kCaseInsensitive,  // full case folding
  kStrict,           // exact, modulo the knowledge base's capitalized first letter
};

std::string_view ToString(MatchMode mode);
MatchMode ParseMatchMode(std::string_view name);

enum class Verification { kUnverified, kSamePerson, kDifferentPerson, kUndetermined };

std::string_view ToString(Verification v);
Verification ParseVerification(std::string_view name);

struct SocialAccount {
  Platform platform = Platform::kGeneric;
  std::string username;
};

struct BridgeResult {
  Platform platform = Platform::kGeneric;
  std::string username;
  bool matched = false;
  std::string normalized;              // form used for matching
  std::optional<std::string> kb_user;  // matched knowledge-base username
  Verification verification = Verification::kUnverified;
};

std::string NormalizeUsername(std::string_view name, MatchMode mode);

// Symmetric: UsernamesMatch(a, b, m) == UsernamesMatch(b, a, m).
bool UsernamesMatch(std::string_view a, std::string_view b, MatchMode mode);

// Human verification labels keyed by (platform, username). File format, one
// tab-separated record per line: username  platform  label
class VerificationLabels {
 public:
  static VerificationLabels Load(const std::filesystem::path& path);
  static VerificationLabels Parse(std::string_view text);

  void Set(Platform platform, std::string username, Verification label);
  Verification Get(Platform platform, std::string_view username) const;

 private:
  std::map<std::pair<Platform, std::string>, Verification, std::less<>> labels_;
};

// When several knowledge-base names normalize to the same form the
// lexicographically first is reported.
std::vector<BridgeResult> MatchUsernames(std::span<const SocialAccount> social,
                                         const std::set<std::string>& kb_users,
                                         MatchMode mode = MatchMode::kCaseInsensitive,
                                         const VerificationLabels* labels = nullptr);

struct PlatformBridgeStats {
  std::size_t usernames = 0;
  std::size_t matched = 0;
  std::size_t same_person = 0;
  std::size_t different_person = 0;
  std::size_t undetermined = 0;

  // Percentages are always derived from the counts.
  double MatchPercent() const;
};

using BridgeReport = std::map<Platform, PlatformBridgeStats>;

BridgeReport MakeBridgeReport(std::span<const BridgeResult> results);

// Tab-separated table: platform, #usernames, matched, exist-on-kb percent
// (one decimal), and verification counts.
std::string FormatBridgeReport(const BridgeReport& report);

}  // namespace reslve

#endif  // RESLVE_IDENTITY_BRIDGE_H_
