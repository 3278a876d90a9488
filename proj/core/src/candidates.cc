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

#include <algorithm>
#include <cctype>

#include "reslve/errors.h"
#include "reslve/tsv.h"

namespace reslve {
namespace {

std::string JoinTokens(std::span<const std::string> tokens) {
  std::string out;
  for (const std::string& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

CandidateMeaning ParseCandidate(std::string_view field, std::string_view context) {
  std::size_t eq = field.rfind('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw InputError(std::string(context) + ": expected <topic>=<prior>, got '" +
                     std::string(field) + "'");
  }
  CandidateMeaning candidate;
  candidate.topic = std::string(field.substr(0, eq));
  std::string_view scores = field.substr(eq + 1);
  std::size_t comma = scores.find(',');
  candidate.prior = ParseDouble(scores.substr(0, comma), context);
  if (comma != std::string_view::npos) {
    candidate.confidence = ParseDouble(scores.substr(comma + 1), context);
    if (*candidate.confidence < 0.0 || *candidate.confidence > 1.0) {
      throw InputError(std::string(context) + ": confidence outside [0,1]");
    }
  }
  if (candidate.prior < 0.0 || candidate.prior > 1.0) {
    throw InputError(std::string(context) + ": prior outside [0,1]");
  }
  return candidate;
}

}  // namespace

std::string_view ToString(WordClass word_class) {
  switch (word_class) {
    case WordClass::kNoun: return "noun";
    case WordClass::kNamedEntity: return "entity";
    case WordClass::kOther: return "other";
  }
  return "other";
}

WordClass ParseWordClass(std::string_view name) {
  std::string lower = ToLower(name);
  if (lower == "noun" || lower == "nn" || lower == "nns" || lower == "nnp" ||
      lower == "np") {
    return WordClass::kNoun;
  }
  if (lower == "entity" || lower == "ne" || lower == "person" ||
      lower == "location" || lower == "organization") {
    return WordClass::kNamedEntity;
  }
  if (lower == "other") return WordClass::kOther;
  throw InputError("unknown word class: " + std::string(name));
}

FixtureCandidateProvider FixtureCandidateProvider::Load(
    const std::filesystem::path& path) {
  try {
    return Parse(ReadFile(path));
  } catch (const InputError& e) {
    throw InputError(path.filename().string() + ": " + e.what());
  }
}

FixtureCandidateProvider FixtureCandidateProvider::Parse(std::string_view text) {
  FixtureCandidateProvider provider;
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
    std::string context = "line " + std::to_string(number);
    std::vector<std::string> fields = SplitTabs(line);
    if (fields.size() < 2) {
      throw InputError(context + ": expected <surface>\\t<class>\\t<candidates>");
    }
    std::vector<CandidateMeaning> candidates;
    for (std::size_t i = 2; i < fields.size(); ++i) {
      if (Trim(fields[i]).empty()) continue;
      candidates.push_back(ParseCandidate(Trim(fields[i]), context));
    }
    std::string surface = ToLower(Trim(fields[0]));
    if (provider.entries_.contains(surface)) {
      throw InputError(context + ": duplicate surface form '" + surface + "'");
    }
    provider.Add(std::move(surface), ParseWordClass(Trim(fields[1])),
                 std::move(candidates));
  }
  return provider;
}

void FixtureCandidateProvider::Add(std::string surface, WordClass word_class,
                                   std::vector<CandidateMeaning> candidates) {
  std::size_t words = SplitWhitespace(surface).size();
  max_ngram_ = std::max(max_ngram_, words);
  entries_.insert_or_assign(std::move(surface),
                            Entry{word_class, std::move(candidates)});
}

std::vector<Mention> FixtureCandidateProvider::Spot(
    std::span<const std::string> tokens) const {
  std::vector<Mention> mentions;
  std::size_t i = 0;
  while (i < tokens.size()) {
    bool matched = false;
    std::size_t longest = std::min(max_ngram_, tokens.size() - i);
    for (std::size_t n = longest; n >= 1 && !matched; --n) {
      auto span = tokens.subspan(i, n);
      if (std::find(span.begin(), span.end(), kMentionToken) != span.end()) continue;
      std::string key = ToLower(JoinTokens(span));
      auto it = entries_.find(key);
      if (it == entries_.end()) continue;
      mentions.push_back(Mention{i, i + n, key, it->second.word_class,
                                 it->second.candidates});
      i += n;
      matched = true;
    }
    if (!matched) ++i;
  }
  return mentions;
}

std::vector<AmbiguousEntity> DetectEntities(const Utterance& utterance,
                                            const CandidateProvider& provider) {
  std::vector<AmbiguousEntity> entities;
  for (Mention& m : provider.Spot(utterance.normalized)) {
    entities.push_back(AmbiguousEntity{std::move(m.surface), utterance.id,
                                       m.word_class, std::move(m.candidates)});
  }
  return entities;
}

bool PassesEntityFilters(const AmbiguousEntity& entity) {
  if (entity.surface.size() < 2) return false;
  bool has_alnum = std::any_of(entity.surface.begin(), entity.surface.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0;
  });
  if (!has_alnum) return false;
  if (!IsEnglish(entity.surface)) return false;
  if (entity.word_class == WordClass::kOther) return false;
  return entity.candidates.size() >= 2;
}

std::vector<AmbiguousEntity> FilterEntities(std::vector<AmbiguousEntity> entities) {
  std::erase_if(entities, [](const AmbiguousEntity& e) { return !PassesEntityFilters(e); });
  return entities;
}

std::vector<CandidateMeaning> PriorFrequencyRank(const AmbiguousEntity& entity) {
  std::vector<CandidateMeaning> ranked = entity.candidates;
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const CandidateMeaning& a, const CandidateMeaning& b) {
                     if (a.prior != b.prior) return a.prior > b.prior;
                     return a.topic < b.topic;
                   });
  return ranked;
}

CandidateCountStats ComputeCandidateCountStats(
    std::span<const AmbiguousEntity> entities) {
  CandidateCountStats stats;
  if (entities.empty()) return stats;
  std::vector<std::size_t> counts;
  counts.reserve(entities.size());
  for (const AmbiguousEntity& e : entities) counts.push_back(e.candidates.size());
  std::sort(counts.begin(), counts.end());
  stats.entities = counts.size();
  stats.min = counts.front();
  stats.max = counts.back();
  std::size_t total = 0;
  for (std::size_t c : counts) total += c;
  stats.mean = static_cast<double>(total) / static_cast<double>(counts.size());
  std::size_t mid = counts.size() / 2;
  stats.median = counts.size() % 2 == 1
                     ? static_cast<double>(counts[mid])
                     : (static_cast<double>(counts[mid - 1]) +
                        static_cast<double>(counts[mid])) / 2.0;
  return stats;
}

}  // namespace reslve
