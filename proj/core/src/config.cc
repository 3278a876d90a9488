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

#include "reslve/config.h"

#include <set>

#include <json.hpp>

#include "reslve/errors.h"
#include "reslve/tsv.h"

namespace reslve {
namespace {

using nlohmann::json;

void CheckKeys(const json& object, std::string_view where,
               const std::set<std::string, std::less<>>& allowed) {
  if (!object.is_object()) throw ConfigError(std::string(where) + ": expected an object");
  for (const auto& [key, value] : object.items()) {
    if (!allowed.contains(key)) {
      throw ConfigError(std::string(where) + ": unknown key '" + key + "'");
    }
  }
}

template <typename T>
void Read(const json& object, const char* key, std::string_view where, T& out) {
  auto it = object.find(key);
  if (it == object.end()) return;
  try {
    if constexpr (std::is_same_v<T, std::string>) {
      if (!it->is_string()) throw ConfigError("");
    } else if constexpr (std::is_same_v<T, double>) {
      if (!it->is_number()) throw ConfigError("");
    } else if constexpr (std::is_integral_v<T> && std::is_unsigned_v<T>) {
      if (!it->is_number_unsigned()) throw ConfigError("");
    } else if constexpr (std::is_integral_v<T>) {
      if (!it->is_number_integer()) throw ConfigError("");
    }
    out = it->get<T>();
  } catch (const std::exception&) {
    throw ConfigError(std::string(where) + "." + key + ": wrong type");
  }
}

std::string ReadString(const json& object, const char* key, std::string_view where,
                       std::string fallback) {
  Read(object, key, where, fallback);
  return fallback;
}

}  // namespace

std::string_view ToString(IngestMode mode) {
  switch (mode) {
    case IngestMode::kReplay: return "replay";
    case IngestMode::kRecord: return "record";
    case IngestMode::kLive: return "live";
  }
  return "replay";
}

IngestMode ParseIngestMode(std::string_view name) {
  if (name == "replay") return IngestMode::kReplay;
  if (name == "record") return IngestMode::kRecord;
  if (name == "live") return IngestMode::kLive;
  throw ConfigError("unknown ingest mode '" + std::string(name) + "'");
}

std::filesystem::path PipelineConfig::Resolve(std::string_view path) const {
  std::filesystem::path p(path);
  if (p.empty() || p.is_absolute()) return p;
  return base_dir / p;
}

RankingOptions PipelineConfig::Ranking() const {
  RankingOptions options;
  options.alpha = alpha;
  options.max_depth = max_depth;
  options.pruning = pruning;
  options.frequency = frequency;
  return options;
}

void ValidateConfig(const PipelineConfig& c) {
  if (!(c.alpha >= 0.0 && c.alpha <= 1.0)) throw ConfigError("alpha must lie in [0, 1]");
  if (c.max_depth < 1) throw ConfigError("max_depth must be positive");
  if (c.min_nonstop_words == 0) throw ConfigError("min_nonstop_words must be positive");
  if (c.min_utterances == 0) throw ConfigError("min_utterances must be positive");
  if (c.min_edits == 0) throw ConfigError("min_edits must be positive");
  if (c.pruning.min_document_frequency == 0) {
    throw ConfigError("prune.min_document_frequency must be positive");
  }
  if (!(c.pruning.max_document_fraction > 0.0 && c.pruning.max_document_fraction <= 1.0)) {
    throw ConfigError("prune.max_document_fraction must lie in (0, 1]");
  }
  if (c.ingest.category_depth < 1) throw ConfigError("ingest.category_depth must be positive");
}

PipelineConfig ParseConfig(std::string_view json_text, const std::filesystem::path& base_dir) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  CheckKeys(root, "config",
            {"alpha", "max_depth", "min_nonstop_words", "min_utterances", "min_edits",
             "frequency", "prune", "bridge_mode", "seeds", "paths", "ingest"});
  PipelineConfig c;
  c.base_dir = base_dir;
  Read(root, "alpha", "config", c.alpha);
  Read(root, "max_depth", "config", c.max_depth);
  Read(root, "min_nonstop_words", "config", c.min_nonstop_words);
  Read(root, "min_utterances", "config", c.min_utterances);
  Read(root, "min_edits", "config", c.min_edits);

  std::string frequency = ReadString(root, "frequency", "config", "edits");
  if (frequency == "edits") {
    c.frequency = FrequencyMode::kEdits;
  } else if (frequency == "articles") {
    c.frequency = FrequencyMode::kArticles;
  } else {
    throw ConfigError("frequency must be 'edits' or 'articles'");
  }

  if (auto it = root.find("prune"); it != root.end()) {
    CheckKeys(*it, "prune", {"min_document_frequency", "max_document_fraction"});
    Read(*it, "min_document_frequency", "prune", c.pruning.min_document_frequency);
    Read(*it, "max_document_fraction", "prune", c.pruning.max_document_fraction);
  }

  try {
    c.bridge_mode = ParseMatchMode(ReadString(root, "bridge_mode", "config", "casefold"));
  } catch (const InputError& e) {
    throw ConfigError(e.what());
  }

  if (auto it = root.find("seeds"); it != root.end()) {
    CheckKeys(*it, "seeds", {"rc", "ru"});
    Read(*it, "rc", "seeds", c.rc_seed);
    Read(*it, "ru", "seeds", c.ru_seed);
  }

  if (auto it = root.find("paths"); it != root.end()) {
    CheckKeys(*it, "paths",
              {"graph", "descriptions", "edits", "utterances", "candidates", "gold",
               "verification", "output"});
    Read(*it, "graph", "paths", c.graph);
    Read(*it, "descriptions", "paths", c.descriptions);
    Read(*it, "edits", "paths", c.edits);
    Read(*it, "utterances", "paths", c.utterances);
    Read(*it, "candidates", "paths", c.candidates);
    Read(*it, "gold", "paths", c.gold);
    Read(*it, "verification", "paths", c.verification);
    Read(*it, "output", "paths", c.output);
  }

  if (auto it = root.find("ingest"); it != root.end()) {
    const json& in = *it;
    CheckKeys(in, "ingest",
              {"mode", "wiki_endpoint", "social_endpoint", "cassette", "category_depth",
               "accounts"});
    c.ingest.mode = ParseIngestMode(ReadString(in, "mode", "ingest", "replay"));
    Read(in, "wiki_endpoint", "ingest", c.ingest.wiki_endpoint);
    Read(in, "social_endpoint", "ingest", c.ingest.social_endpoint);
    Read(in, "cassette", "ingest", c.ingest.cassette);
    Read(in, "category_depth", "ingest", c.ingest.category_depth);
    if (auto acc = in.find("accounts"); acc != in.end()) {
      if (!acc->is_array()) throw ConfigError("ingest.accounts: expected an array");
      for (const json& a : *acc) {
        CheckKeys(a, "ingest.accounts[]", {"platform", "username"});
        SocialAccount account;
        try {
          account.platform = ParsePlatform(ReadString(a, "platform", "ingest.accounts[]", ""));
        } catch (const InputError& e) {
          throw ConfigError(e.what());
        }
        account.username = ReadString(a, "username", "ingest.accounts[]", "");
        if (account.username.empty()) throw ConfigError("ingest.accounts[]: empty username");
        c.ingest.accounts.push_back(std::move(account));
      }
    }
  }
  ValidateConfig(c);
  return c;
}

PipelineConfig LoadConfig(const std::filesystem::path& path) {
  std::string text;
  try {
    text = ReadFile(path);
  } catch (const InputError& e) {
    throw ConfigError(e.what());
  }
  return ParseConfig(text, path.parent_path());
}

std::string SerializeConfig(const PipelineConfig& c) {
  json root;
  root["alpha"] = c.alpha;
  root["max_depth"] = c.max_depth;
  root["min_nonstop_words"] = c.min_nonstop_words;
  root["min_utterances"] = c.min_utterances;
  root["min_edits"] = c.min_edits;
  root["frequency"] = c.frequency == FrequencyMode::kEdits ? "edits" : "articles";
  root["prune"] = {{"min_document_frequency", c.pruning.min_document_frequency},
                   {"max_document_fraction", c.pruning.max_document_fraction}};
  root["bridge_mode"] = ToString(c.bridge_mode);
  root["seeds"] = {{"rc", c.rc_seed}, {"ru", c.ru_seed}};
  root["paths"] = {{"graph", c.graph},           {"descriptions", c.descriptions},
                   {"edits", c.edits},           {"utterances", c.utterances},
                   {"candidates", c.candidates}, {"gold", c.gold},
                   {"verification", c.verification}, {"output", c.output}};
  json accounts = json::array();
  for (const SocialAccount& a : c.ingest.accounts) {
    accounts.push_back({{"platform", ToString(a.platform)}, {"username", a.username}});
  }
  root["ingest"] = {{"mode", ToString(c.ingest.mode)},
                    {"wiki_endpoint", c.ingest.wiki_endpoint},
                    {"social_endpoint", c.ingest.social_endpoint},
                    {"cassette", c.ingest.cassette},
                    {"category_depth", c.ingest.category_depth},
                    {"accounts", std::move(accounts)}};
  return root.dump(2) + "\n";
}

}  // namespace reslve
