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

#include "reslve/ingest.h"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include <json.hpp>

#include "reslve/errors.h"
#include "reslve/graph_io.h"
#include "reslve/identity_bridge.h"
#include "reslve/tsv.h"

namespace reslve {
namespace {

using nlohmann::json;

json ParseBody(const std::string& body, const std::string& what) {
  try {
    return json::parse(body);
  } catch (const json::parse_error&) {
    throw InputError("malformed response for " + what);
  }
}

const json& Field(const json& object, const char* key, const std::string& what) {
  if (!object.is_object() || !object.contains(key)) {
    throw InputError("malformed response for " + what + ": missing '" + key + "'");
  }
  return object.at(key);
}

std::string StringField(const json& object, const char* key, const std::string& what) {
  const json& value = Field(object, key, what);
  if (!value.is_string()) throw InputError("malformed response for " + what);
  return value.get<std::string>();
}

HttpRequest Query(const std::string& endpoint,
                  std::vector<std::pair<std::string, std::string>> params) {
  params.emplace_back("format", "json");
  params.emplace_back("formatversion", "2");
  return HttpRequest{endpoint, "", std::move(params)};
}

// Appends the "continue" parameters of a response to the next request.
bool Continue(const json& response, HttpRequest& request,
              const std::vector<std::pair<std::string, std::string>>& base) {
  auto it = response.find("continue");
  if (it == response.end() || !it->is_object()) return false;
  request.query = base;
  for (const auto& [key, value] : it->items()) {
    request.query.emplace_back(key, value.is_string() ? value.get<std::string>() : value.dump());
  }
  request.query.emplace_back("format", "json");
  request.query.emplace_back("formatversion", "2");
  return true;
}

std::vector<std::string> CategoryTitles(const json& page, const std::string& what) {
  std::vector<std::string> out;
  auto it = page.find("categories");
  if (it == page.end()) return out;
  if (!it->is_array()) throw InputError("malformed response for " + what);
  for (const json& c : *it) out.push_back(StringField(c, "title", what));
  return out;
}

const json& SinglePage(const json& response, const std::string& what) {
  const json& pages = Field(Field(response, "query", what), "pages", what);
  if (!pages.is_array() || pages.size() != 1) throw InputError("malformed response for " + what);
  return pages.front();
}

std::string AccountName(const SocialAccount& a) {
  return std::string(ToString(a.platform)) + ":" + a.username;
}

void WriteCheckpoint(const std::filesystem::path& path, const std::vector<std::string>& done) {
  json root;
  root["completed"] = done;
  WriteFileAtomic(path, root.dump(1) + "\n");
}

}  // namespace

std::string TitleToId(std::string_view title) {
  std::string id(title);
  std::replace(id.begin(), id.end(), ' ', '_');
  return id;
}

std::optional<std::vector<Contribution>> MediaWikiClient::UserContributions(
    const std::string& user) {
  const std::vector<std::pair<std::string, std::string>> base = {
      {"action", "query"},
      {"list", "usercontribs"},
      {"ucuser", user},
      {"uclimit", "500"},
      {"ucdir", "newer"},
      {"ucprop", "title|timestamp|comment|flags|sizediff"}};
  const std::string what = "contributions of " + user;
  HttpRequest request = Query(endpoint_, base);
  std::vector<Contribution> out;
  while (true) {
    json response = ParseBody(transport_.Get(request), what);
    if (auto error = response.find("error"); error != response.end()) {
      std::string code = error->value("code", "");
      if (code.find("user") != std::string::npos) return std::nullopt;
      throw InputError("knowledge-base API error for " + what + ": " + code);
    }
    const json& contribs = Field(Field(response, "query", what), "usercontribs", what);
    if (!contribs.is_array()) throw InputError("malformed response for " + what);
    for (const json& c : contribs) {
      Contribution record;
      record.user = StringField(c, "user", what);
      record.title = StringField(c, "title", what);
      record.ns = c.value("ns", 0);
      record.timestamp = StringField(c, "timestamp", what);
      record.comment = c.value("comment", "");
      record.minor = c.value("minor", false);
      record.size_diff = c.value("sizediff", 0LL);
      out.push_back(std::move(record));
    }
    if (!Continue(response, request, base)) break;
  }
  // The API reports a missing account as an empty list for some wikis.
  if (out.empty()) return std::nullopt;
  return out;
}

std::optional<WikiPage> MediaWikiClient::Page(const std::string& title) {
  const std::vector<std::pair<std::string, std::string>> base = {
      {"action", "query"},  {"prop", "revisions|categories"},
      {"titles", title},    {"rvprop", "content"},
      {"rvslots", "main"},  {"cllimit", "max"},
      {"clshow", "!hidden"}};
  const std::string what = "page " + title;
  HttpRequest request = Query(endpoint_, base);
  WikiPage page;
  page.title = title;
  bool have_content = false;
  while (true) {
    json response = ParseBody(transport_.Get(request), what);
    const json& p = SinglePage(response, what);
    if (p.value("missing", false)) return std::nullopt;
    if (auto revs = p.find("revisions"); revs != p.end() && !have_content) {
      if (!revs->is_array() || revs->empty()) throw InputError("malformed response for " + what);
      page.content = StringField(Field(Field(revs->front(), "slots", what), "main", what),
                                 "content", what);
      have_content = true;
    }
    for (std::string& c : CategoryTitles(p, what)) page.categories.push_back(std::move(c));
    if (!Continue(response, request, base)) break;
  }
  if (!have_content) throw InputError("malformed response for " + what + ": no revision");
  std::sort(page.categories.begin(), page.categories.end());
  page.categories.erase(std::unique(page.categories.begin(), page.categories.end()),
                        page.categories.end());
  return page;
}

std::vector<std::string> MediaWikiClient::CategoryParents(const std::string& category_title) {
  const std::vector<std::pair<std::string, std::string>> base = {
      {"action", "query"}, {"prop", "categories"}, {"titles", category_title},
      {"cllimit", "max"},  {"clshow", "!hidden"}};
  const std::string what = "category " + category_title;
  HttpRequest request = Query(endpoint_, base);
  std::vector<std::string> parents;
  while (true) {
    json response = ParseBody(transport_.Get(request), what);
    const json& p = SinglePage(response, what);
    for (std::string& c : CategoryTitles(p, what)) parents.push_back(std::move(c));
    if (!Continue(response, request, base)) break;
  }
  std::sort(parents.begin(), parents.end());
  parents.erase(std::unique(parents.begin(), parents.end()), parents.end());
  return parents;
}

std::vector<Utterance> SocialClient::Posts(const SocialAccount& account) {
  const std::string what = "posts of " + AccountName(account);
  HttpRequest request{endpoint_, "/posts",
                      {{"platform", std::string(ToString(account.platform))},
                       {"user", account.username}}};
  std::vector<Utterance> out;
  std::set<std::string> ids;
  while (true) {
    json response = ParseBody(transport_.Get(request), what);
    const json& posts = Field(response, "posts", what);
    if (!posts.is_array()) throw InputError("malformed response for " + what);
    for (const json& post : posts) {
      Utterance u;
      const json& id = Field(post, "id", what);
      std::string raw_id = id.is_string() ? id.get<std::string>() : id.dump();
      u.id = std::string(ToString(account.platform)) + "-" + raw_id;
      if (!ids.insert(u.id).second) continue;
      u.platform = account.platform;
      u.kind = ParseUtteranceKind(StringField(post, "kind", what));
      u.user = account.username;
      u.raw = StringField(post, "text", what);
      out.push_back(std::move(u));
    }
    auto next = response.find("next");
    if (next == response.end() || !next->is_string() || next->get<std::string>().empty()) break;
    request.query = {{"platform", std::string(ToString(account.platform))},
                     {"user", account.username},
                     {"cursor", next->get<std::string>()}};
  }
  return out;
}

IngestResult Ingest(const PipelineConfig& config, HttpTransport& transport,
                    const std::optional<std::filesystem::path>& checkpoint) {
  IngestResult result;
  MediaWikiClient wiki(transport, config.ingest.wiki_endpoint);
  SocialClient social(transport, config.ingest.social_endpoint);

  std::vector<SocialAccount> accounts = config.ingest.accounts;
  std::sort(accounts.begin(), accounts.end(), [](const SocialAccount& a, const SocialAccount& b) {
    return std::pair(a.platform, a.username) < std::pair(b.platform, b.username);
  });
  accounts.erase(std::unique(accounts.begin(), accounts.end(),
                             [](const SocialAccount& a, const SocialAccount& b) {
                               return a.platform == b.platform && a.username == b.username;
                             }),
                 accounts.end());
  if (accounts.empty()) result.warnings.push_back("no accounts configured; snapshot is empty");

  std::vector<Contribution> contributions;
  std::map<std::string, std::vector<Contribution>> by_kb_user;
  auto exclude = [&](const SocialAccount& a, std::string reason) {
    result.exclusions.push_back({a.platform, a.username, std::move(reason)});
  };

  try {
    for (const SocialAccount& account : accounts) {
      std::vector<Utterance> posts;
      try {
        posts = social.Posts(account);
      } catch (const InputError& e) {
        exclude(account, e.what());
        continue;
      }
      if (posts.size() < config.min_utterances) {
        exclude(account, std::to_string(posts.size()) + " utterances, below threshold " +
                             std::to_string(config.min_utterances));
        continue;
      }
      std::string kb_name = NormalizeUsername(account.username, MatchMode::kStrict);
      std::optional<std::vector<Contribution>> contribs;
      if (auto cached = by_kb_user.find(kb_name); cached != by_kb_user.end()) {
        contribs = cached->second;
      } else {
        try {
          contribs = wiki.UserContributions(kb_name);
        } catch (const InputError& e) {
          exclude(account, e.what());
          continue;
        }
      }
      if (!contribs) {
        exclude(account, "identity not bridged: no knowledge-base account " + kb_name);
        continue;
      }
      if (contribs->size() < config.min_edits) {
        exclude(account, std::to_string(contribs->size()) + " edits, below threshold " +
                             std::to_string(config.min_edits));
        continue;
      }
      if (by_kb_user.emplace(kb_name, *contribs).second) {
        contributions.insert(contributions.end(), contribs->begin(), contribs->end());
      }
      for (Utterance& u : posts) result.utterances.push_back(std::move(u));
      result.completed.push_back(AccountName(account));
      if (checkpoint) WriteCheckpoint(*checkpoint, result.completed);
    }

    // Articles edited in the main namespace.
    std::set<std::string> titles;
    for (const Contribution& c : contributions) {
      if (c.ns == 0) titles.insert(c.title);
    }
    KnowledgeGraph::Builder builder;
    std::set<std::string> fetched;
    std::set<std::string> frontier;
    for (const std::string& title : titles) {
      std::optional<WikiPage> page;
      try {
        page = wiki.Page(title);
      } catch (const InputError& e) {
        result.warnings.push_back(std::string("skipped ") + title + ": " + e.what());
        continue;
      }
      if (!page) {
        result.warnings.push_back("skipped " + title + ": page missing");
        continue;
      }
      std::vector<CategoryId> categories;
      for (const std::string& c : page->categories) {
        categories.push_back(TitleToId(c));
        frontier.insert(c);
      }
      builder.AddTopic(TitleToId(title), std::move(categories), page->content);
      fetched.insert(title);
    }

    std::set<std::string> seen;
    for (int level = 1; level <= config.ingest.category_depth && !frontier.empty(); ++level) {
      std::set<std::string> next;
      for (const std::string& category : frontier) {
        if (!seen.insert(category).second) continue;
        std::vector<std::string> parents;
        try {
          parents = wiki.CategoryParents(category);
        } catch (const InputError& e) {
          result.warnings.push_back(std::string("no parents for ") + category + ": " + e.what());
        }
        std::vector<CategoryId> parent_ids;
        for (const std::string& p : parents) {
          parent_ids.push_back(TitleToId(p));
          if (!seen.contains(p)) next.insert(p);
        }
        builder.AddCategory(TitleToId(category), std::move(parent_ids));
      }
      frontier = std::move(next);
    }
    // Categories beyond the fetched depth become roots.
    for (const std::string& category : frontier) {
      if (!seen.contains(category)) builder.AddCategory(TitleToId(category));
    }
    KnowledgeGraph graph = std::move(builder).Build();
    result.graph = FormatGraphSnapshot(graph);
    result.descriptions = FormatDescriptions(graph);

    for (const Contribution& c : contributions) {
      if (c.ns != 0 || !fetched.contains(c.title)) continue;
      EditRecord e;
      e.user = TitleToId(c.user);
      e.topic = TitleToId(c.title);
      e.timestamp = c.timestamp;
      e.kind = ClassifyEdit(c.comment, c.minor);
      e.delta_size = c.size_diff;
      result.edits.push_back(std::move(e));
    }
    std::sort(result.edits.begin(), result.edits.end(),
              [](const EditRecord& a, const EditRecord& b) {
                return std::tie(a.user, a.timestamp, a.topic) <
                       std::tie(b.user, b.timestamp, b.topic);
              });
    std::sort(result.utterances.begin(), result.utterances.end(),
              [](const Utterance& a, const Utterance& b) { return a.id < b.id; });
  } catch (const ServiceError& e) {
    if (checkpoint) WriteCheckpoint(*checkpoint, result.completed);
    throw ServiceError(std::string(e.what()) + " (ingestion interrupted after " +
                           std::to_string(result.completed.size()) + " of " +
                           std::to_string(accounts.size()) +
                           " accounts; rerun to resume from recorded responses)",
                       e.retriable());
  }
  return result;
}

std::string FormatExclusions(std::span<const Exclusion> exclusions) {
  std::string out;
  for (const Exclusion& e : exclusions) {
    out += std::string(ToString(e.platform)) + "\t" + e.username + "\t" + EscapeField(e.reason) +
           "\n";
  }
  return out;
}

void WriteIngestOutputs(const IngestResult& result, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  WriteFileAtomic(dir / "graph.tsv", result.graph);
  WriteFileAtomic(dir / "descriptions.jsonl", result.descriptions);
  WriteFileAtomic(dir / "edits.tsv", FormatEditHistory(result.edits));
  WriteFileAtomic(dir / "utterances.tsv", FormatUtteranceCorpus(result.utterances));
  WriteFileAtomic(dir / "exclusions.tsv", FormatExclusions(result.exclusions));
}

}  // namespace reslve
