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

#ifndef RESLVE_HTTP_TRANSPORT_H_
#define RESLVE_HTTP_TRANSPORT_H_

// GET-only HTTP access with record/replay. A cassette maps a canonical
// request key to the recorded response body.

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace reslve {

struct HttpRequest {
  std::string base_url;  // scheme://host[:port][/prefix]
  std::string path;      // appended to the base URL's prefix
  std::vector<std::pair<std::string, std::string>> query;
};

std::string UrlEncode(std::string_view text);

// base_url + path + "?" + query sorted by name then value, percent-encoded.
std::string CanonicalKey(const HttpRequest& request);

class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  // Returns the body of a 200 response. Throws ServiceError otherwise.
  virtual std::string Get(const HttpRequest& request) = 0;
};

class Cassette {
 public:
  static Cassette Load(const std::filesystem::path& path);  // missing file: empty
  static Cassette Parse(std::string_view json_text);
  std::string Serialize() const;  // sorted keys
  void Save(const std::filesystem::path& path) const;

  const std::string* Find(std::string_view key) const;
  void Put(std::string key, std::string body) { entries_[std::move(key)] = std::move(body); }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

struct LiveOptions {
  int timeout_seconds = 30;
  std::string user_agent = "reslve/0.1";
  std::map<std::string, std::string> bearer_tokens;  // base_url -> token
};

std::unique_ptr<HttpTransport> MakeLiveTransport(LiveOptions options = {});

// Serves from the cassette when possible, otherwise forwards to inner and
// appends the response. The file is rewritten after every new entry.
std::unique_ptr<HttpTransport> MakeRecordingTransport(std::unique_ptr<HttpTransport> inner,
                                                      std::filesystem::path cassette_path);

// Never touches the network. Unknown requests raise ServiceError.
std::unique_ptr<HttpTransport> MakeReplayTransport(Cassette cassette);

}  // namespace reslve

#endif  // RESLVE_HTTP_TRANSPORT_H_
