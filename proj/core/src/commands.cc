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

#include "reslve/commands.h"

#include <cstdlib>
#include <map>
#include <sstream>

#include <json.hpp>

#include "reslve/candidates.h"
#include "reslve/errors.h"
#include "reslve/evaluation.h"
#include "reslve/graph_io.h"
#include "reslve/identity_bridge.h"
#include "reslve/ingest.h"
#include "reslve/similarity.h"
#include "reslve/text_pipeline.h"
#include "reslve/tsv.h"

namespace reslve {
namespace {

std::filesystem::path Required(const PipelineConfig& config, const std::string& path,
                               const char* key) {
  if (path.empty()) throw ConfigError(std::string("paths.") + key + " is not set");
  return config.Resolve(path);
}

std::filesystem::path OutputDir(const PipelineConfig& config) {
  return config.Resolve(config.output);
}

std::filesystem::path OrDefault(const std::filesystem::path& given,
                                const std::filesystem::path& fallback) {
  return given.empty() ? fallback : given;
}

void WriteOutput(const std::filesystem::path& path, std::string_view data) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  WriteFileAtomic(path, data);
}

std::set<std::string> UsersOf(std::span<const EditRecord> edits) {
  std::set<std::string> users;
  for (const EditRecord& e : edits) users.insert(e.user);
  return users;
}

std::optional<VerificationLabels> LoadLabels(const PipelineConfig& config) {
  if (config.verification.empty()) return std::nullopt;
  return VerificationLabels::Load(config.Resolve(config.verification));
}

// Models for every gold author that bridges, keyed by social username.
std::map<std::string, UserInterestModel> AuthorModels(const PipelineConfig& config,
                                                      std::span<const GoldLabel> gold,
                                                      const KnowledgeGraph& graph,
                                                      std::span<const EditRecord> edits) {
  std::set<std::string> kb_users = UsersOf(edits);
  std::map<std::string, UserInterestModel> by_kb_user;
  std::map<std::string, UserInterestModel> models;
  for (const GoldLabel& g : gold) {
    if (g.excluded || models.contains(g.user)) continue;
    std::string kb_user;
    try {
      kb_user = BridgeAccount(config, {g.platform, g.user}, kb_users);
    } catch (const IdentityNotBridgedError&) {
      continue;
    }
    auto it = by_kb_user.find(kb_user);
    if (it == by_kb_user.end()) {
      try {
        it = by_kb_user.emplace(kb_user, BuildUserModel(kb_user, edits, graph, config.max_depth))
                 .first;
      } catch (const InactiveUserError&) {
        continue;
      }
    }
    models.emplace(g.user, it->second);
  }
  return models;
}

EvalReport RunEvaluation(const PipelineConfig& config, bool alpha_sweep) {
  KnowledgeGraph graph = LoadConfiguredGraph(config);
  std::vector<EditRecord> edits = LoadFilteredEdits(config, graph);
  std::vector<GoldLabel> gold = LoadGoldDataset(Required(config, config.gold, "gold"));
  std::map<std::string, UserInterestModel> models = AuthorModels(config, gold, graph, edits);
  EvaluationOptions options;
  options.ranking = config.Ranking();
  options.rc_seed = config.rc_seed;
  options.ru_seed = config.ru_seed;
  options.alpha_sweep = alpha_sweep;
  return EvaluateDataset(gold, models, graph, options);
}

std::vector<AnnotatedText> AnnotateCorpus(const PipelineConfig& config) {
  FixtureCandidateProvider provider =
      FixtureCandidateProvider::Load(Required(config, config.candidates, "candidates"));
  std::vector<AnnotatedText> corpus;
  for (Utterance& u :
       LoadUtteranceCorpus(Required(config, config.utterances, "utterances"))) {
    AnnotatedText text;
    text.utterance = PreprocessUtterance(std::move(u));
    if (!text.utterance.non_english) text.entities = DetectEntities(text.utterance, provider);
    corpus.push_back(std::move(text));
  }
  return corpus;
}

nlohmann::ordered_json RankingRecord(const AmbiguousEntity& entity, const RankedResult& result) {
  nlohmann::ordered_json record;
  record["utterance_id"] = entity.utterance_id;
  record["surface"] = entity.surface;
  nlohmann::ordered_json ranking = nlohmann::ordered_json::array();
  for (const ScoredCandidate& s : result.ranked) {
    ranking.push_back(nlohmann::ordered_json::array(
        {s.candidate.topic, s.scores.content, s.scores.category, s.scores.combined}));
  }
  record["ranking"] = std::move(ranking);
  return record;
}

}  // namespace

KnowledgeGraph LoadConfiguredGraph(const PipelineConfig& config) {
  std::optional<std::filesystem::path> descriptions;
  if (!config.descriptions.empty()) descriptions = config.Resolve(config.descriptions);
  return LoadGraphSnapshot(Required(config, config.graph, "graph"), descriptions);
}

std::vector<EditRecord> LoadFilteredEdits(const PipelineConfig& config,
                                          const KnowledgeGraph& graph) {
  std::vector<EditRecord> edits = LoadEditHistory(Required(config, config.edits, "edits"));
  return FilterEdits(edits, graph, config.min_nonstop_words).kept;
}

std::string BridgeAccount(const PipelineConfig& config, const SocialAccount& account,
                          const std::set<std::string>& kb_users) {
  std::optional<VerificationLabels> labels = LoadLabels(config);
  std::vector<SocialAccount> one = {account};
  BridgeResult r =
      MatchUsernames(one, kb_users, config.bridge_mode, labels ? &*labels : nullptr).front();
  std::string who = std::string(ToString(account.platform)) + " user " + account.username;
  if (!r.matched) throw IdentityNotBridgedError("identity not bridged: " + who);
  if (r.verification == Verification::kDifferentPerson) {
    throw IdentityNotBridgedError("identity not bridged: " + who +
                                  " is labeled as a different person than " + *r.kb_user);
  }
  return *r.kb_user;
}

std::string RunIngest(const PipelineConfig& config, const IngestArgs& args,
                      HttpTransport* transport) {
  IngestMode mode = args.mode.value_or(config.ingest.mode);
  std::filesystem::path out_dir = OrDefault(args.out_dir, OutputDir(config) / "snapshot");
  std::unique_ptr<HttpTransport> owned;
  if (transport == nullptr) {
    std::filesystem::path cassette;
    if (mode != IngestMode::kLive) {
      if (config.ingest.cassette.empty()) {
        throw ConfigError("ingest.cassette is required in replay and record modes");
      }
      cassette = config.Resolve(config.ingest.cassette);
    }
    if (!config.ingest.accounts.empty() &&
        (config.ingest.wiki_endpoint.empty() || config.ingest.social_endpoint.empty())) {
      throw ConfigError("ingest.wiki_endpoint and ingest.social_endpoint are required");
    }
    LiveOptions live;
    for (auto [endpoint, env] : {std::pair{config.ingest.wiki_endpoint, kWikiTokenEnv},
                                 std::pair{config.ingest.social_endpoint, kSocialTokenEnv}}) {
      if (const char* token = std::getenv(env)) live.bearer_tokens[endpoint] = token;
    }
    switch (mode) {
      case IngestMode::kReplay:
        if (!std::filesystem::exists(cassette)) {
          throw InputError("replay mode needs recorded responses at " + cassette.string());
        }
        owned = MakeReplayTransport(Cassette::Load(cassette));
        break;
      case IngestMode::kRecord:
        owned = MakeRecordingTransport(MakeLiveTransport(live), cassette);
        break;
      case IngestMode::kLive:
        owned = MakeLiveTransport(live);
        break;
    }
    transport = owned.get();
  }
  std::filesystem::create_directories(out_dir);
  std::filesystem::path checkpoint = out_dir / "ingest.checkpoint";
  std::ostringstream summary;
  if (std::filesystem::exists(checkpoint)) {
    summary << "resuming from " << checkpoint.string() << "\n";
  }
  IngestResult result = Ingest(config, *transport, checkpoint);
  WriteIngestOutputs(result, out_dir);
  std::filesystem::remove(checkpoint);
  for (const std::string& w : result.warnings) summary << "warning: " << w << "\n";
  summary << "accounts collected: " << result.completed.size() << "\n"
          << "accounts excluded: " << result.exclusions.size() << "\n"
          << "edits: " << result.edits.size() << "\n"
          << "utterances: " << result.utterances.size() << "\n"
          << "snapshot: " << out_dir.string() << "\n";
  return summary.str();
}

std::string RunBuildModel(const PipelineConfig& config, const BuildModelArgs& args) {
  KnowledgeGraph graph = LoadConfiguredGraph(config);
  std::vector<EditRecord> edits = LoadFilteredEdits(config, graph);
  std::string kb_user = args.user;
  if (args.platform) kb_user = BridgeAccount(config, {*args.platform, args.user}, UsersOf(edits));
  UserInterestModel model = BuildUserModel(kb_user, edits, graph, config.max_depth);
  std::filesystem::path out =
      OrDefault(args.out, OutputDir(config) / "models" / (kb_user + ".json"));
  WriteOutput(out, SerializeUserModel(model));
  std::ostringstream summary;
  summary << "user: " << kb_user << "\n"
          << "edited topics: " << model.edited_topics.size() << "\n"
          << "interest categories: " << model.aggregated.categories().size() << "\n"
          << "model: " << out.string() << "\n";
  return summary.str();
}

std::string RunResolve(const PipelineConfig& config, const ResolveArgs& args) {
  KnowledgeGraph graph = LoadConfiguredGraph(config);
  std::vector<EditRecord> edits = LoadFilteredEdits(config, graph);
  std::string kb_user = BridgeAccount(config, {args.platform, args.user}, UsersOf(edits));
  UserInterestModel model = BuildUserModel(kb_user, edits, graph, config.max_depth);
  FixtureCandidateProvider provider =
      FixtureCandidateProvider::Load(Required(config, config.candidates, "candidates"));
  std::filesystem::path corpus_path =
      args.utterances.empty() ? Required(config, config.utterances, "utterances")
                              : args.utterances;
  RankingOptions options = config.Ranking();

  std::string records;
  std::ostringstream summary;
  std::size_t texts = 0;
  std::size_t entities = 0;
  for (Utterance& raw : LoadUtteranceCorpus(corpus_path)) {
    if (raw.user != args.user || raw.platform != args.platform) continue;
    ++texts;
    Utterance u = PreprocessUtterance(std::move(raw));
    if (u.non_english) continue;
    for (const AmbiguousEntity& entity : FilterEntities(DetectEntities(u, provider))) {
      RankedResult result = RankCandidates(model, entity, graph, options);
      records += RankingRecord(entity, result)
                     .dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
      records += '\n';
      ++entities;
      summary << entity.utterance_id << "\t" << entity.surface << "\t-> "
              << result.top().candidate.topic << " (" << FormatDouble(result.top().scores.combined)
              << ")\n";
    }
  }
  std::filesystem::path out = OrDefault(args.out, OutputDir(config) / "rankings.jsonl");
  WriteOutput(out, records);
  summary << "user: " << args.user << " -> " << kb_user << "\n"
          << "texts: " << texts << ", ranked entities: " << entities << "\n"
          << "rankings: " << out.string() << "\n";
  return summary.str();
}

std::string RunEvaluate(const PipelineConfig& config, const EvaluateArgs& args) {
  EvalReport report = RunEvaluation(config, true);
  std::filesystem::path dir = OrDefault(args.out_dir, OutputDir(config));
  std::string grid = FormatPrecisionGrid(report);
  WriteOutput(dir / "precision.tsv", grid);
  WriteOutput(dir / "alpha_sweep.tsv", FormatAlphaSweep(report));
  WriteOutput(dir / "report.json", FormatEvalReportJson(report));
  std::ostringstream summary;
  summary << grid;
  if (!config.utterances.empty() && !config.candidates.empty()) {
    std::vector<AnnotatedText> corpus = AnnotateCorpus(config);
    WriteOutput(dir / "ambiguity.tsv", FormatAmbiguityReport(ComputeAmbiguityStats(corpus)));
  }
  std::size_t evaluated = report.entities.size();
  summary << "evaluated entities: " << evaluated << ", excluded: " << report.excluded
          << ", skipped: " << report.skipped.size() << "\n";
  if (report.agreement) {
    summary << "fleiss kappa: " << FormatDouble(report.agreement->kappa) << "\n";
  }
  summary << "outputs: " << dir.string() << "\n";
  return summary.str();
}

std::string RunSweepAlpha(const PipelineConfig& config, const EvaluateArgs& args) {
  EvalReport report = RunEvaluation(config, true);
  std::filesystem::path dir = OrDefault(args.out_dir, OutputDir(config));
  std::string sweep = FormatAlphaSweep(report);
  WriteOutput(dir / "alpha_sweep.tsv", sweep);
  return sweep;
}

std::string RunStats(const PipelineConfig& config, const StatsArgs& args) {
  std::vector<AnnotatedText> corpus = AnnotateCorpus(config);
  std::string out = FormatAmbiguityReport(ComputeAmbiguityStats(corpus));

  // Interest coverage of each bridged user's candidates.
  KnowledgeGraph graph = LoadConfiguredGraph(config);
  std::vector<EditRecord> raw = LoadEditHistory(Required(config, config.edits, "edits"));
  FilteredEdits filtered = FilterEdits(raw, graph, config.min_nonstop_words);
  std::set<std::string> kb_users = UsersOf(filtered.kept);
  std::map<std::pair<Platform, std::string>, std::vector<AmbiguousEntity>> by_account;
  for (const AnnotatedText& t : corpus) {
    auto& list = by_account[{t.utterance.platform, t.utterance.user}];
    for (const AmbiguousEntity& e : FilterEntities(t.entities)) list.push_back(e);
  }
  std::ostringstream coverage;
  coverage << "# interest_coverage\n";
  coverage << "platform\tuser\tdistance\tcovered\ttotal\n";
  for (const auto& [account, entities] : by_account) {
    std::string kb_user;
    try {
      kb_user = BridgeAccount(config, {account.first, account.second}, kb_users);
    } catch (const IdentityNotBridgedError&) {
      continue;
    }
    UserInterestModel model;
    try {
      model = BuildUserModel(kb_user, filtered.kept, graph, config.max_depth);
    } catch (const InactiveUserError&) {
      continue;
    }
    for (const CoveragePoint& p : CoverageProfile(model, entities, graph, config.max_depth)) {
      coverage << ToString(account.first) << '\t' << account.second << '\t' << p.distance << '\t'
               << p.covered << '\t' << p.total << '\n';
    }
  }
  out += coverage.str();
  out += "# edits\n";
  out += "total\tkept\n";
  out += std::to_string(raw.size()) + "\t" + std::to_string(filtered.kept.size()) + "\n";

  std::filesystem::path path = OrDefault(args.out, OutputDir(config) / "stats.tsv");
  WriteOutput(path, out);
  return out;
}

std::string RunBridge(const PipelineConfig& config, const BridgeArgs& args) {
  std::set<std::string> kb_users =
      UsersOf(LoadEditHistory(Required(config, config.edits, "edits")));
  std::set<std::pair<Platform, std::string>> accounts;
  for (const SocialAccount& a : config.ingest.accounts) accounts.insert({a.platform, a.username});
  if (!config.utterances.empty()) {
    for (const Utterance& u : LoadUtteranceCorpus(config.Resolve(config.utterances))) {
      accounts.insert({u.platform, u.user});
    }
  }
  std::vector<SocialAccount> social;
  for (const auto& [platform, username] : accounts) social.push_back({platform, username});
  std::optional<VerificationLabels> labels = LoadLabels(config);
  std::vector<BridgeResult> results = MatchUsernames(
      social, kb_users, args.mode.value_or(config.bridge_mode), labels ? &*labels : nullptr);
  std::string report = FormatBridgeReport(MakeBridgeReport(results));
  std::ostringstream detail;
  detail << "# accounts\n";
  detail << "platform\tusername\tmatched\tkb_user\tverification\n";
  for (const BridgeResult& r : results) {
    detail << ToString(r.platform) << '\t' << r.username << '\t' << (r.matched ? "yes" : "no")
           << '\t' << r.kb_user.value_or("-") << '\t' << ToString(r.verification) << '\n';
  }
  std::filesystem::path path = OrDefault(args.out, OutputDir(config) / "bridge.tsv");
  WriteOutput(path, report + detail.str());
  return report;
}

}  // namespace reslve
