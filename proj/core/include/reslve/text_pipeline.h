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

#ifndef RESLVE_TEXT_PIPELINE_H_
#define RESLVE_TEXT_PIPELINE_H_

// Cleaning of knowledge-base article text and normalization of short
// social-platform utterances.

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace reslve {

enum class Platform { kTwitter, kYouTube, kFlickr, kGeneric };
enum class UtteranceKind { kTweet, kTitle, kDescription, kTag };

std::string_view ToString(Platform platform);
std::string_view ToString(UtteranceKind kind);
// Throw InputError on unknown names. Accepts the lowercase names emitted by
// ToString.
Platform ParsePlatform(std::string_view name);
UtteranceKind ParseUtteranceKind(std::string_view name);

// Token emitted in place of an @name reference on Twitter.
inline constexpr std::string_view kMentionToken = "MENTION";

struct Utterance {
  std::string id;
  Platform platform = Platform::kGeneric;
  UtteranceKind kind = UtteranceKind::kTweet;
  std::string user;
  std::string raw;                      // preserved verbatim
  std::vector<std::string> normalized;  // filled by PreprocessUtterance
  bool non_english = false;
};

// Embedded lists. Both are sorted and lowercase.
bool IsStopword(std::string_view lowercase_word);
bool IsEnglishWord(std::string_view lowercase_word);
const std::vector<std::string_view>& Stopwords();

struct EnglishDetectionOptions {
  double min_latin_fraction = 0.85;
  // Texts with at least this many tokens must contain a stopword.
  std::size_t stopword_check_min_tokens = 3;
};

// Heuristic language check: enough basic-Latin characters and, for texts of
// several tokens, at least one English stopword. Empty text is not English.
bool IsEnglish(std::string_view text, const EnglishDetectionOptions& options = {});

// Removes wiki markup (templates, tables, references, file and category
// links, comments, html tags) keeping the visible text of ordinary links.
std::string StripWikiMarkup(std::string_view raw);

// Article text to index terms: markup removed, lowercased, split on
// non-alphanumerics, stopwords and single characters dropped, stemmed.
std::vector<std::string> CleanArticleText(std::string_view raw);

// Count of non-stopword tokens in an article body after markup removal; the
// activity filter for edits uses this.
std::size_t CountNonStopwordTokens(std::string_view raw);

// Splits a hashtag body on lower-to-upper case and letter-digit boundaries.
std::vector<std::string> SplitCamelCase(std::string_view text);

// True for camera-generated media names such as IMG_336.jpg or MOV_02.AVI.
bool IsAutoGeneratedFileName(std::string_view token);

// Returns the stem when token looks like "<stem>.<media extension>".
std::optional<std::string> MediaFileStem(std::string_view token);

// True for Flickr-style machine tags, "namespace:predicate=value".
bool IsMachineTag(std::string_view token);

bool IsUrl(std::string_view token);

// Applies the platform rules and fills normalized and non_english. Output is
// a fixed point: running it again on the joined normalized tokens yields the
// same tokens.
Utterance PreprocessUtterance(Utterance utterance,
                              const EnglishDetectionOptions& options = {});

// Utterance corpus: one tab-separated record per line,
//   id platform kind user text
// with tabs, newlines and backslashes in text escaped. Ids must be unique.
std::vector<Utterance> ParseUtteranceCorpus(std::string_view text);
std::vector<Utterance> LoadUtteranceCorpus(const std::filesystem::path& path);
std::string FormatUtteranceCorpus(std::span<const Utterance> utterances);

}  // namespace reslve

#endif  // RESLVE_TEXT_PIPELINE_H_
