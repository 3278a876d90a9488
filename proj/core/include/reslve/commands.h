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

#ifndef RESLVE_COMMANDS_H_
#define RESLVE_COMMANDS_H_

// Subcommands behind the command-line tool. Each writes its outputs and
// returns a short human-readable summary.

#include <filesystem>
#include <optional>
#include <set>
#include <string>

#include "reslve/config.h"
#include "reslve/http_transport.h"
#include "reslve/interest_model.h"
#include "reslve/knowledge_graph.h"

namespace reslve {

struct IngestArgs {
  std::optional<IngestMode> mode;  // overrides config
  std::filesystem::path out_dir;   // default: config output dir / "snapshot"
};

// transport, when given, replaces the one selected by the mode.
std::string RunIngest(const PipelineConfig& config, const IngestArgs& args,
                      HttpTransport* transport = nullptr);

struct BuildModelArgs {
  std::string user;                 // knowledge-base user, or social with platform
  std::optional<Platform> platform;
  std::filesystem::path out;        // default: output dir / models / <user>.json
};
std::string RunBuildModel(const PipelineConfig& config, const BuildModelArgs& args);

struct ResolveArgs {
  std::string user;  // social username
  Platform platform = Platform::kTwitter;
  std::filesystem::path utterances;  // default: config utterance corpus
  std::filesystem::path out;         // default: output dir / rankings.jsonl
};
std::string RunResolve(const PipelineConfig& config, const ResolveArgs& args);

struct EvaluateArgs {
  std::filesystem::path out_dir;  // default: config output dir
};
std::string RunEvaluate(const PipelineConfig& config, const EvaluateArgs& args);
std::string RunSweepAlpha(const PipelineConfig& config, const EvaluateArgs& args);

struct StatsArgs {
  std::filesystem::path out;  // default: output dir / stats.tsv
};
std::string RunStats(const PipelineConfig& config, const StatsArgs& args);

struct BridgeArgs {
  std::optional<MatchMode> mode;
  std::filesystem::path out;  // default: output dir / bridge.tsv
};
std::string RunBridge(const PipelineConfig& config, const BridgeArgs& args);

// Shared steps, exposed for tests.
KnowledgeGraph LoadConfiguredGraph(const PipelineConfig& config);
std::vector<EditRecord> LoadFilteredEdits(const PipelineConfig& config,
                                          const KnowledgeGraph& graph);
// Maps a social account to its knowledge-base username. Throws
// IdentityNotBridgedError when no match exists or the match is labeled as a
// different person.
std::string BridgeAccount(const PipelineConfig& config, const SocialAccount& account,
                          const std::set<std::string>& kb_users);

}  // namespace reslve

#endif  // RESLVE_COMMANDS_H_
