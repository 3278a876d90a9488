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

#include "reslve/http_transport.h"

#include <algorithm>
#include <cstdio>

#include <httplib.h>
#include <json.hpp>

#include "reslve/errors.h"
#include "reslve/tsv.h"

namespace reslve {
namespace {

// Splits "scheme://host:port/prefix" into the client origin and path prefix.
std::pair<std::string, std::string> SplitBase(std::string_view base_url) {
  std::size_t scheme = base_url.find("://");
  std::size_t start = scheme == std::string_view::npos ? 0 : scheme + 3;
  std::size_t slash = base_url.find('/', start);
  if (slash == std::string_view::npos) return {std::string(base_url), ""};
  std::string prefix(base_url.substr(slash));
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  return {std::string(base_url.substr(0, slash)), prefix};
}

std::string QueryString(const HttpRequest& request) {
  auto query = request.query;
  std::sort(query.begin(), query.end());
  std::string out;
  for (const auto& [name, value] : query) {
    if (!out.empty()) out += '&';
    out += UrlEncode(name) + "=" + UrlEncode(value);
  }
  return out;
}

class LiveTransport : public HttpTransport {
 public:
  explicit LiveTransport(LiveOptions options) : options_(std::move(options)) {}

  std::string Get(const HttpRequest& request) override {
    auto [origin, prefix] = SplitBase(request.base_url);
    httplib::Client client(origin);
    client.set_connection_timeout(options_.timeout_seconds, 0);
    client.set_read_timeout(options_.timeout_seconds, 0);
    client.set_follow_location(true);
    httplib::Headers headers = {{"User-Agent", options_.user_agent}};
    if (auto it = options_.bearer_tokens.find(request.base_url);
        it != options_.bearer_tokens.end() && !it->second.empty()) {
      headers.emplace("Authorization", "Bearer " + it->second);
    }
    std::string target = prefix + request.path;
    std::string query = QueryString(request);
    if (!query.empty()) target += "?" + query;
    httplib::Result result = client.Get(target, headers);
    if (!result) {
      throw ServiceError("request to " + CanonicalKey(request) + " failed: " +
                             httplib::to_string(result.error()),
                         /*retriable=*/true);
    }
    if (result->status != 200) {
      bool retriable = result->status == 429 || result->status >= 500;
      throw ServiceError("request to " + CanonicalKey(request) + " returned HTTP " +
                             std::to_string(result->status),
                         retriable);
    }
    return result->body;
  }

 private:
  LiveOptions options_;
};

class RecordingTransport : public HttpTransport {
 public:
  RecordingTransport(std::unique_ptr<HttpTransport> inner, std::filesystem::path path)
      : inner_(std::move(inner)), path_(std::move(path)), cassette_(Cassette::Load(path_)) {}

  std::string Get(const HttpRequest& request) override {
    std::string key = CanonicalKey(request);
    if (const std::string* body = cassette_.Find(key)) return *body;
    std::string body = inner_->Get(request);
    cassette_.Put(key, body);
    cassette_.Save(path_);
    return body;
  }

 private:
  std::unique_ptr<HttpTransport> inner_;
  std::filesystem::path path_;
  Cassette cassette_;
};

class ReplayTransport : public HttpTransport {
 public:
  explicit ReplayTransport(Cassette cassette) : cassette_(std::move(cassette)) {}

  std::string Get(const HttpRequest& request) override {
    std::string key = CanonicalKey(request);
    if (const std::string* body = cassette_.Find(key)) return *body;
    throw ServiceError("no recorded response for " + key, /*retriable=*/false);
  }

 private:
  Cassette cassette_;
};

}  // namespace

std::string UrlEncode(std::string_view text) {
  std::string out;
  for (char ch : text) {
    auto c = static_cast<unsigned char>(ch);
    if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
        c == '-' || c == '_' || c == '.' || c == '~') {
      out += ch;
    } else {
      char buffer[4];
      std::snprintf(buffer, sizeof(buffer), "%%%02X", c);
      out += buffer;
    }
  }
  return out;
}

std::string CanonicalKey(const HttpRequest& request) {
  std::string key = request.base_url + request.path;
  std::string query = QueryString(request);
  if (!query.empty()) key += "?" + query;
  return key;
}

Cassette Cassette::Parse(std::string_view json_text) {
  Cassette cassette;
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("cassette is not valid JSON: ") + e.what());
  }
  if (!root.is_object() || !root.contains("entries") || !root["entries"].is_object()) {
    throw InputError("cassette must be an object with an 'entries' object");
  }
  for (const auto& [key, value] : root["entries"].items()) {
    if (!value.is_string()) throw InputError("cassette entry '" + key + "' is not a string");
    cassette.Put(key, value.get<std::string>());
  }
  return cassette;
}

Cassette Cassette::Load(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) return {};
  return Parse(ReadFile(path));
}

std::string Cassette::Serialize() const {
  nlohmann::json entries = nlohmann::json::object();
  for (const auto& [key, body] : entries_) entries[key] = body;
  nlohmann::json root;
  root["entries"] = std::move(entries);
  return root.dump(1, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
}

void Cassette::Save(const std::filesystem::path& path) const {
  WriteFileAtomic(path, Serialize());
}

const std::string* Cassette::Find(std::string_view key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

std::unique_ptr<HttpTransport> MakeLiveTransport(LiveOptions options) {
  return std::make_unique<LiveTransport>(std::move(options));
}

std::unique_ptr<HttpTransport> MakeRecordingTransport(std::unique_ptr<HttpTransport> inner,
                                                      std::filesystem::path cassette_path) {
  return std::make_unique<RecordingTransport>(std::move(inner), std::move(cassette_path));
}

std::unique_ptr<HttpTransport> MakeReplayTransport(Cassette cassette) {
  return std::make_unique<ReplayTransport>(std::move(cassette));
}

}  // namespace reslve
