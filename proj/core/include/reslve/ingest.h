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

#ifndef RESLVE_INGEST_H_
#define RESLVE_INGEST_H_

// Collection of edit histories, article text, the category hierarchy and
// social posts through an HttpTransport, producing snapshot files.

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reslve/config.h"
#include "reslve/http_transport.h"
#include "reslve/interest_model.h"
#include "reslve/text_pipeline.h"

namespace reslve {

struct Contribution {
  std::string user;  // canonical knowledge-base username
  std::string title;
  int ns = 0;
  std::string timestamp;
  std::string comment;
  bool minor = false;
  long long size_diff = 0;
};

struct WikiPage {
  std::string title;
  std::string content;
  std::vector<std::string> categories;  // "Category:..." titles
};

// MediaWiki action API client (list=usercontribs, prop=revisions|categories).
class MediaWikiClient {
 public:
  MediaWikiClient(HttpTransport& transport, std::string endpoint)
      : transport_(transport), endpoint_(std::move(endpoint)) {}

  // Every contribution of the user across continuation pages. Absent when the
  // account does not exist. Throws InputError for malformed responses.
  std::optional<std::vector<Contribution>> UserContributions(const std::string& user);
  // Absent for missing pages.
  std::optional<WikiPage> Page(const std::string& title);
  std::vector<std::string> CategoryParents(const std::string& category_title);

 private:
  HttpTransport& transport_;
  std::string endpoint_;
};

// Post service: GET <base>/posts?platform=..&user=..[&cursor=..] returning
// {"posts":[{"id":..,"kind":..,"text":..}], "next": cursor?}.
class SocialClient {
 public:
  SocialClient(HttpTransport& transport, std::string endpoint)
      : transport_(transport), endpoint_(std::move(endpoint)) {}

  std::vector<Utterance> Posts(const SocialAccount& account);

 private:
  HttpTransport& transport_;
  std::string endpoint_;
};

// "Some title" -> "Some_title".
std::string TitleToId(std::string_view title);

struct Exclusion {
  Platform platform = Platform::kGeneric;
  std::string username;
  std::string reason;
};

struct IngestResult {
  std::string graph;          // snapshot text
  std::string descriptions;   // JSONL
  std::vector<EditRecord> edits;
  std::vector<Utterance> utterances;
  std::vector<Exclusion> exclusions;
  std::vector<std::string> warnings;
  std::vector<std::string> completed;  // accounts fully collected
};

// Runs collection for config.ingest.accounts. Accounts below the activity
// thresholds or without a knowledge-base account are excluded. On a
// ServiceError the checkpoint (if given) lists completed accounts and the
// error propagates; rerunning with a recording transport reuses cached
// responses.
IngestResult Ingest(const PipelineConfig& config, HttpTransport& transport,
                    const std::optional<std::filesystem::path>& checkpoint = {});

std::string FormatExclusions(std::span<const Exclusion> exclusions);

// Writes graph.tsv, descriptions.jsonl, edits.tsv, utterances.tsv and
// exclusions.tsv into dir.
void WriteIngestOutputs(const IngestResult& result, const std::filesystem::path& dir);

}  // namespace reslve

#endif  // RESLVE_INGEST_H_
