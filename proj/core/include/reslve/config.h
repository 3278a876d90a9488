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

#ifndef RESLVE_CONFIG_H_
#define RESLVE_CONFIG_H_

// Pipeline configuration file (JSON). Relative paths resolve against the
// directory holding the file.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reslve/identity_bridge.h"
#include "reslve/similarity.h"
#include "reslve/text_pipeline.h"

namespace reslve {

enum class IngestMode { kReplay, kRecord, kLive };
std::string_view ToString(IngestMode mode);
IngestMode ParseIngestMode(std::string_view name);

struct IngestConfig {
  IngestMode mode = IngestMode::kReplay;
  std::string wiki_endpoint;    // e.g. https://en.wikipedia.org/w/api.php
  std::string social_endpoint;  // base URL of the post service
  std::string cassette;         // recorded responses
  int category_depth = 4;       // parent levels fetched above each article
  std::vector<SocialAccount> accounts;
};

struct PipelineConfig {
  double alpha = 0.5;
  int max_depth = kDefaultMaxDepth;
  std::size_t min_nonstop_words = 100;
  std::size_t min_utterances = 100;
  std::size_t min_edits = 100;
  FrequencyMode frequency = FrequencyMode::kEdits;
  PruningOptions pruning;
  MatchMode bridge_mode = MatchMode::kCaseInsensitive;
  std::uint64_t rc_seed = 1;
  std::uint64_t ru_seed = 2;

  // Input files; empty when absent.
  std::string graph;
  std::string descriptions;
  std::string edits;
  std::string utterances;
  std::string candidates;
  std::string gold;
  std::string verification;
  std::string output = "out";

  IngestConfig ingest;

  // Directory used to resolve relative paths. Not serialized.
  std::filesystem::path base_dir;

  std::filesystem::path Resolve(std::string_view path) const;
  RankingOptions Ranking() const;
};

// Throws ConfigError on unknown keys, wrong types or out-of-range values.
PipelineConfig ParseConfig(std::string_view json_text,
                           const std::filesystem::path& base_dir = {});
PipelineConfig LoadConfig(const std::filesystem::path& path);
void ValidateConfig(const PipelineConfig& config);

// Canonical form: every key present, keys sorted, two-space indent.
std::string SerializeConfig(const PipelineConfig& config);

// Name of the environment variables holding endpoint credentials.
inline constexpr const char* kWikiTokenEnv = "RESLVE_WIKI_TOKEN";
inline constexpr const char* kSocialTokenEnv = "RESLVE_SOCIAL_TOKEN";

}  // namespace reslve

#endif  // RESLVE_CONFIG_H_
