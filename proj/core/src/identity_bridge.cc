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

#include <cctype>
#include <cstdio>
#include <sstream>

#include "reslve/errors.h"
#include "reslve/tsv.h"

namespace reslve {

std::string_view ToString(MatchMode mode) {
  return mode == MatchMode::kStrict ? "strict" : "casefold";
}

MatchMode ParseMatchMode(std::string_view name) {
  std::string lower = ToLower(name);
  if (lower == "strict") return MatchMode::kStrict;
  if (lower == "casefold" || lower == "case-insensitive") return MatchMode::kCaseInsensitive;
  throw ConfigError("unknown match mode: " + std::string(name));
}

std::string_view ToString(Verification v) {
  switch (v) {
    case Verification::kUnverified: return "unverified";
    case Verification::kSamePerson: return "same-person";
    case Verification::kDifferentPerson: return "different-person";
    case Verification::kUndetermined: return "undetermined";
  }
  return "unverified";
}

Verification ParseVerification(std::string_view name) {
  std::string lower = ToLower(name);
  if (lower == "unverified") return Verification::kUnverified;
  if (lower == "same-person" || lower == "same") return Verification::kSamePerson;
  if (lower == "different-person" || lower == "different") {
    return Verification::kDifferentPerson;
  }
  if (lower == "undetermined") return Verification::kUndetermined;
  throw InputError("unknown verification label: " + std::string(name));
}

std::string NormalizeUsername(std::string_view name, MatchMode mode) {
  std::string trimmed = Trim(name);
  if (mode == MatchMode::kCaseInsensitive) return ToLower(trimmed);
  // The knowledge base stores usernames with a capitalized first letter and
  // underscores shown as spaces.
  for (char& c : trimmed) {
    if (c == ' ') c = '_';
  }
  if (!trimmed.empty()) {
    trimmed[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(trimmed[0])));
  }
  return trimmed;
}

bool UsernamesMatch(std::string_view a, std::string_view b, MatchMode mode) {
  return NormalizeUsername(a, mode) == NormalizeUsername(b, mode);
}

VerificationLabels VerificationLabels::Load(const std::filesystem::path& path) {
  return Parse(ReadFile(path));
}

VerificationLabels VerificationLabels::Parse(std::string_view text) {
  VerificationLabels labels;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> f = SplitTabs(line);
    if (f.size() != 3) {
      throw InputError("annotation line " + std::to_string(number) +
                       ": expected username, platform, label");
    }
    labels.Set(ParsePlatform(f[1]), f[0], ParseVerification(f[2]));
  }
  return labels;
}

void VerificationLabels::Set(Platform platform, std::string username,
                             Verification label) {
  labels_[{platform, std::move(username)}] = label;
}

Verification VerificationLabels::Get(Platform platform,
                                     std::string_view username) const {
  auto it = labels_.find(std::pair<Platform, std::string>(platform, username));
  return it == labels_.end() ? Verification::kUnverified : it->second;
}

std::vector<BridgeResult> MatchUsernames(std::span<const SocialAccount> social,
                                         const std::set<std::string>& kb_users,
                                         MatchMode mode,
                                         const VerificationLabels* labels) {
  std::map<std::string, std::string> kb_by_form;
  for (const std::string& user : kb_users) {
    kb_by_form.try_emplace(NormalizeUsername(user, mode), user);
  }
  std::vector<BridgeResult> results;
  results.reserve(social.size());
  for (const SocialAccount& account : social) {
    BridgeResult r;
    r.platform = account.platform;
    r.username = account.username;
    r.normalized = NormalizeUsername(account.username, mode);
    if (auto it = kb_by_form.find(r.normalized); it != kb_by_form.end()) {
      r.matched = true;
      r.kb_user = it->second;
    }
    if (labels != nullptr) r.verification = labels->Get(account.platform, account.username);
    results.push_back(std::move(r));
  }
  return results;
}

double PlatformBridgeStats::MatchPercent() const {
  if (usernames == 0) return 0.0;
  return 100.0 * static_cast<double>(matched) / static_cast<double>(usernames);
}

BridgeReport MakeBridgeReport(std::span<const BridgeResult> results) {
  BridgeReport report;
  for (const BridgeResult& r : results) {
    PlatformBridgeStats& s = report[r.platform];
    ++s.usernames;
    if (!r.matched) continue;
    ++s.matched;
    switch (r.verification) {
      case Verification::kSamePerson: ++s.same_person; break;
      case Verification::kDifferentPerson: ++s.different_person; break;
      case Verification::kUndetermined: ++s.undetermined; break;
      case Verification::kUnverified: break;
    }
  }
  return report;
}

std::string FormatBridgeReport(const BridgeReport& report) {
  std::ostringstream out;
  out << "platform\tusernames\tmatched\texist_on_kb\tsame_person\tdifferent_person"
         "\tundetermined\n";
  for (const auto& [platform, s] : report) {
    char percent[32];
    std::snprintf(percent, sizeof(percent), "%.1f%%", s.MatchPercent());
    out << ToString(platform) << '\t' << s.usernames << '\t' << s.matched << '\t'
        << percent << '\t' << s.same_person << '\t' << s.different_person << '\t'
        << s.undetermined << '\n';
  }
  return out.str();
}

}  // namespace reslve
