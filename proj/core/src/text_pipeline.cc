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

#include "reslve/text_pipeline.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <set>

#include "reslve/errors.h"
#include "reslve/porter_stemmer.h"
#include "reslve/tsv.h"

namespace reslve {
namespace internal {
extern const std::string_view kEnglishWords;
}  // namespace internal

namespace {

// The common 179-word English stopword list used by NLTK.
constexpr std::array kStopwordList = {
    "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you",
    "you're", "you've", "you'll", "you'd", "your", "yours", "yourself",
    "yourselves", "he", "him", "his", "himself", "she", "she's", "her", "hers",
    "herself", "it", "it's", "its", "itself", "they", "them", "their",
    "theirs", "themselves", "what", "which", "who", "whom", "this", "that",
    "that'll", "these", "those", "am", "is", "are", "was", "were", "be",
    "been", "being", "have", "has", "had", "having", "do", "does", "did",
    "doing", "a", "an", "the", "and", "but", "if", "or", "because", "as",
    "until", "while", "of", "at", "by", "for", "with", "about", "against",
    "between", "into", "through", "during", "before", "after", "above",
    "below", "to", "from", "up", "down", "in", "out", "on", "off", "over",
    "under", "again", "further", "then", "once", "here", "there", "when",
    "where", "why", "how", "all", "any", "both", "each", "few", "more",
    "most", "other", "some", "such", "no", "nor", "not", "only", "own",
    "same", "so", "than", "too", "very", "s", "t", "can", "will", "just",
    "don", "don't", "should", "should've", "now", "d", "ll", "m", "o", "re",
    "ve", "y", "ain", "aren", "aren't", "couldn", "couldn't", "didn",
    "didn't", "doesn", "doesn't", "hadn", "hadn't", "hasn", "hasn't",
    "haven", "haven't", "isn", "isn't", "ma", "mightn", "mightn't", "mustn",
    "mustn't", "needn", "needn't", "shan", "shan't", "shouldn", "shouldn't",
    "wasn", "wasn't", "weren", "weren't", "won", "won't", "wouldn",
    "wouldn't"};

constexpr std::array<std::string_view, 19> kMediaExtensions = {
    "3gp", "avi", "bmp", "flv", "gif", "heic", "jpeg", "jpg", "m4v", "mkv",
    "mov", "mp4", "mpeg", "mpg", "png", "tif", "tiff", "webm", "wmv"};

std::vector<std::string_view> SortedStopwords() {
  std::vector<std::string_view> words(kStopwordList.begin(), kStopwordList.end());
  std::sort(words.begin(), words.end());
  return words;
}

std::vector<std::string_view> ParseWordList(std::string_view text) {
  std::vector<std::string_view> words;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    if (end > start) words.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

const std::vector<std::string_view>& EnglishWords() {
  static const std::vector<std::string_view> words =
      ParseWordList(internal::kEnglishWords);
  return words;
}

bool IsAsciiAlnum(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

bool IsWordByte(char c) {
  return IsAsciiAlnum(c) || static_cast<unsigned char>(c) >= 0x80;
}

bool StartsWithIgnoreCase(std::string_view text, std::string_view prefix) {
  if (text.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(text[i])) !=
        std::tolower(static_cast<unsigned char>(prefix[i]))) {
      return false;
    }
  }
  return true;
}

// Finds the end (one past) of a construct opened by `open` and closed by
// `close`, honouring nesting. Returns npos when unbalanced.
std::size_t MatchBalanced(std::string_view text, std::size_t start,
                          std::string_view open, std::string_view close) {
  int depth = 0;
  std::size_t i = start;
  while (i < text.size()) {
    if (text.compare(i, open.size(), open) == 0) {
      ++depth;
      i += open.size();
    } else if (text.compare(i, close.size(), close) == 0) {
      --depth;
      i += close.size();
      if (depth == 0) return i;
    } else {
      ++i;
    }
  }
  return std::string_view::npos;
}

std::string RemoveBalanced(std::string_view text, std::string_view open,
                           std::string_view close) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text.compare(i, open.size(), open) == 0) {
      std::size_t end = MatchBalanced(text, i, open, close);
      if (end == std::string_view::npos) break;  // drop the unterminated tail
      i = end;
      out += ' ';
    } else {
      out += text[i++];
    }
  }
  return out;
}

std::string RemoveDelimited(std::string_view text, std::string_view open,
                            std::string_view close) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text.compare(i, open.size(), open) == 0) {
      std::size_t end = text.find(close, i + open.size());
      if (end == std::string_view::npos) break;
      i = end + close.size();
      out += ' ';
    } else {
      out += text[i++];
    }
  }
  return out;
}

// <ref ...>...</ref> and <ref .../>, case-insensitive.
std::string RemoveReferences(std::string_view text) {
  std::string lower = ToLower(text);
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (lower.compare(i, 4, "<ref") == 0 &&
        (i + 4 < text.size() && (text[i + 4] == '>' || text[i + 4] == ' ' ||
                                 text[i + 4] == '/'))) {
      std::size_t tag_end = text.find('>', i);
      if (tag_end == std::string_view::npos) break;
      if (text[tag_end - 1] == '/') {
        i = tag_end + 1;
      } else {
        std::size_t close = lower.find("</ref>", tag_end);
        if (close == std::string::npos) break;
        i = close + 6;
      }
      out += ' ';
    } else {
      out += text[i++];
    }
  }
  return out;
}

std::string RewriteLinks(std::string_view text) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text.compare(i, 2, "[[") == 0) {
      std::size_t end = MatchBalanced(text, i, "[[", "]]");
      if (end == std::string_view::npos) break;
      std::string_view inner = text.substr(i + 2, end - i - 4);
      i = end;
      std::string trimmed = Trim(inner);
      if (trimmed.starts_with(':')) trimmed.erase(0, 1);
      if (StartsWithIgnoreCase(trimmed, "category:") ||
          StartsWithIgnoreCase(trimmed, "file:") ||
          StartsWithIgnoreCase(trimmed, "image:")) {
        out += ' ';
        continue;
      }
      std::size_t bar = trimmed.rfind('|');
      out += bar == std::string::npos ? trimmed : trimmed.substr(bar + 1);
    } else if (text[i] == '[' && (StartsWithIgnoreCase(text.substr(i + 1), "http://") ||
                                  StartsWithIgnoreCase(text.substr(i + 1), "https://"))) {
      std::size_t end = text.find(']', i);
      if (end == std::string_view::npos) break;
      std::string_view inner = text.substr(i + 1, end - i - 1);
      std::size_t space = inner.find(' ');
      if (space != std::string_view::npos) out += inner.substr(space + 1);
      out += ' ';
      i = end + 1;
    } else {
      out += text[i++];
    }
  }
  return out;
}

std::string RemoveTagsAndMagic(std::string_view text) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '<') {
      std::size_t end = text.find('>', i);
      if (end == std::string_view::npos) break;
      i = end + 1;
      out += ' ';
    } else if (text.compare(i, 2, "__") == 0) {
      std::size_t end = text.find("__", i + 2);
      bool magic = end != std::string_view::npos && end > i + 2;
      for (std::size_t k = i + 2; magic && k < end; ++k) {
        magic = std::isupper(static_cast<unsigned char>(text[k])) != 0;
      }
      if (magic) {
        i = end + 2;
        out += ' ';
      } else {
        out += text[i++];
      }
    } else if (text.compare(i, 2, "''") == 0) {
      while (i < text.size() && text[i] == '\'') ++i;
    } else {
      out += text[i++];
    }
  }
  return out;
}

// Lowercased alphanumeric runs. Non-ASCII bytes are treated as letters so
// UTF-8 words stay intact.
std::vector<std::string> ArticleTokens(std::string_view raw) {
  std::string text = StripWikiMarkup(raw);
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && !IsWordByte(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && IsWordByte(text[i])) ++i;
    if (i == start) continue;
    std::string token = ToLower(std::string_view(text).substr(start, i - start));
    if (token.size() < 2 || IsStopword(token)) continue;
    tokens.push_back(std::move(token));
  }
  return tokens;
}

// Leading and trailing punctuation removed; interior characters kept.
std::string_view TrimPunctuation(std::string_view token) {
  std::size_t begin = 0;
  std::size_t end = token.size();
  while (begin < end && !IsWordByte(token[begin])) ++begin;
  while (end > begin && !IsWordByte(token[end - 1])) --end;
  return token.substr(begin, end - begin);
}

bool IsMediaExtension(std::string_view extension) {
  std::string lower = ToLower(extension);
  return std::binary_search(kMediaExtensions.begin(), kMediaExtensions.end(),
                            std::string_view(lower));
}

// Decodes one UTF-8 code point, advancing i. Invalid bytes decode as U+FFFD.
std::uint32_t NextCodePoint(std::string_view text, std::size_t& i) {
  auto byte = [&](std::size_t k) { return static_cast<unsigned char>(text[k]); };
  unsigned char lead = byte(i);
  int extra = 0;
  std::uint32_t cp = 0;
  if (lead < 0x80) {
    ++i;
    return lead;
  } else if ((lead & 0xE0) == 0xC0) {
    extra = 1;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3;
    cp = lead & 0x07;
  } else {
    ++i;
    return 0xFFFD;
  }
  if (i + static_cast<std::size_t>(extra) >= text.size()) {
    i = text.size();
    return 0xFFFD;
  }
  for (int k = 1; k <= extra; ++k) {
    unsigned char next = byte(i + static_cast<std::size_t>(k));
    if ((next & 0xC0) != 0x80) {
      i += static_cast<std::size_t>(k);
      return 0xFFFD;
    }
    cp = (cp << 6) | (next & 0x3F);
  }
  i += static_cast<std::size_t>(extra) + 1;
  return cp;
}

}  // namespace

std::string_view ToString(Platform platform) {
  switch (platform) {
    case Platform::kTwitter: return "twitter";
    case Platform::kYouTube: return "youtube";
    case Platform::kFlickr: return "flickr";
    case Platform::kGeneric: return "generic";
  }
  return "generic";
}

std::string_view ToString(UtteranceKind kind) {
  switch (kind) {
    case UtteranceKind::kTweet: return "tweet";
    case UtteranceKind::kTitle: return "title";
    case UtteranceKind::kDescription: return "description";
    case UtteranceKind::kTag: return "tag";
  }
  return "tweet";
}

Platform ParsePlatform(std::string_view name) {
  std::string lower = ToLower(name);
  if (lower == "twitter") return Platform::kTwitter;
  if (lower == "youtube") return Platform::kYouTube;
  if (lower == "flickr") return Platform::kFlickr;
  if (lower == "generic") return Platform::kGeneric;
  throw InputError("unknown platform: " + std::string(name));
}

UtteranceKind ParseUtteranceKind(std::string_view name) {
  std::string lower = ToLower(name);
  if (lower == "tweet") return UtteranceKind::kTweet;
  if (lower == "title") return UtteranceKind::kTitle;
  if (lower == "description" || lower == "desc") return UtteranceKind::kDescription;
  if (lower == "tag") return UtteranceKind::kTag;
  throw InputError("unknown utterance kind: " + std::string(name));
}

const std::vector<std::string_view>& Stopwords() {
  static const std::vector<std::string_view> words = SortedStopwords();
  return words;
}

bool IsStopword(std::string_view lowercase_word) {
  const auto& words = Stopwords();
  return std::binary_search(words.begin(), words.end(), lowercase_word);
}

bool IsEnglishWord(std::string_view lowercase_word) {
  const auto& words = EnglishWords();
  return std::binary_search(words.begin(), words.end(), lowercase_word) ||
         IsStopword(lowercase_word);
}

bool IsEnglish(std::string_view text, const EnglishDetectionOptions& options) {
  std::size_t total = 0;
  std::size_t latin = 0;
  bool has_ascii_letter = false;
  std::size_t i = 0;
  while (i < text.size()) {
    std::uint32_t cp = NextCodePoint(text, i);
    if (cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r') continue;
    ++total;
    // Basic Latin through Latin Extended-B.
    if (cp <= 0x024F && cp != 0xFFFD) ++latin;
    if (cp < 0x80 && std::isalpha(static_cast<int>(cp))) has_ascii_letter = true;
  }
  if (total == 0 || !has_ascii_letter) return false;
  if (static_cast<double>(latin) < options.min_latin_fraction * static_cast<double>(total)) {
    return false;
  }
  std::vector<std::string> tokens = SplitWhitespace(text);
  if (tokens.size() < options.stopword_check_min_tokens) return true;
  return std::any_of(tokens.begin(), tokens.end(), [](const std::string& t) {
    return IsStopword(ToLower(TrimPunctuation(t)));
  });
}

std::string StripWikiMarkup(std::string_view raw) {
  std::string text = RemoveDelimited(raw, "<!--", "-->");
  text = RemoveReferences(text);
  text = RemoveBalanced(text, "{{", "}}");
  text = RemoveBalanced(text, "{|", "|}");
  text = RewriteLinks(text);
  return RemoveTagsAndMagic(text);
}

std::vector<std::string> CleanArticleText(std::string_view raw) {
  std::vector<std::string> tokens = ArticleTokens(raw);
  for (std::string& token : tokens) token = PorterStem(token);
  return tokens;
}

std::size_t CountNonStopwordTokens(std::string_view raw) {
  return ArticleTokens(raw).size();
}

std::vector<std::string> SplitCamelCase(std::string_view text) {
  std::vector<std::string> parts;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) parts.push_back(std::move(current));
    current.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == '_' || c == '-') {
      flush();
      continue;
    }
    if (!current.empty()) {
      unsigned char prev = static_cast<unsigned char>(current.back());
      bool lower_to_upper = std::islower(prev) && std::isupper(c);
      bool digit_boundary = (std::isdigit(prev) != 0) != (std::isdigit(c) != 0);
      // "NYCParty": an upper letter followed by a lower one starts a new word.
      bool acronym_end = std::isupper(prev) && std::isupper(c) &&
                         i + 1 < text.size() &&
                         std::islower(static_cast<unsigned char>(text[i + 1]));
      if (lower_to_upper || digit_boundary || acronym_end) flush();
    }
    current += static_cast<char>(c);
  }
  flush();
  return parts;
}

std::optional<std::string> MediaFileStem(std::string_view token) {
  std::size_t dot = token.rfind('.');
  if (dot == std::string_view::npos || dot == 0 || dot + 1 == token.size()) {
    return std::nullopt;
  }
  if (!IsMediaExtension(token.substr(dot + 1))) return std::nullopt;
  return std::string(token.substr(0, dot));
}

bool IsAutoGeneratedFileName(std::string_view token) {
  std::optional<std::string> stem = MediaFileStem(token);
  if (!stem) return false;
  std::string lower = ToLower(*stem);
  std::size_t i = 0;
  bool prefixed = false;
  for (std::string_view prefix : {"dscn", "dscf", "img", "mov", "dsc"}) {
    if (lower.starts_with(prefix)) {
      i = prefix.size();
      prefixed = true;
      break;
    }
  }
  if (!prefixed) return false;
  if (i < lower.size() && (lower[i] == '_' || lower[i] == '-')) ++i;
  if (i == lower.size()) return false;
  for (; i < lower.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(lower[i]))) return false;
  }
  return true;
}

bool IsMachineTag(std::string_view token) {
  std::size_t colon = token.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  std::size_t equals = token.find('=', colon + 1);
  if (equals == std::string_view::npos || equals == colon + 1) return false;
  if (IsUrl(token)) return false;
  for (std::size_t k = 0; k < colon; ++k) {
    char c = token[k];
    if (!IsAsciiAlnum(c) && c != '_') return false;
  }
  return true;
}

bool IsUrl(std::string_view token) {
  return StartsWithIgnoreCase(token, "http://") ||
         StartsWithIgnoreCase(token, "https://") ||
         StartsWithIgnoreCase(token, "www.") ||
         token.find("://") != std::string_view::npos;
}

Utterance PreprocessUtterance(Utterance utterance,
                              const EnglishDetectionOptions& options) {
  const bool twitter = utterance.platform == Platform::kTwitter;
  const bool media = utterance.platform == Platform::kYouTube ||
                     utterance.platform == Platform::kFlickr;

  std::vector<std::string> tokens;
  for (const std::string& token : SplitWhitespace(utterance.raw)) {
    if (IsUrl(token)) continue;
    std::string_view trimmed = TrimPunctuation(token);

    if (twitter) {
      if (ToLower(trimmed) == "rt" && !token.starts_with('#') && !token.starts_with('@')) {
        continue;
      }
      if (token.size() > 1 && token[0] == '@' &&
          (IsAsciiAlnum(token[1]) || token[1] == '_')) {
        tokens.emplace_back(kMentionToken);
        continue;
      }
      if (trimmed == kMentionToken) {
        tokens.emplace_back(kMentionToken);
        continue;
      }
      if (token.starts_with('#')) {
        std::vector<std::string> parts = SplitCamelCase(trimmed);
        bool keep = !parts.empty();
        for (std::string& part : parts) {
          part = ToLower(part);
          keep = keep && IsEnglishWord(part);
        }
        if (keep) tokens.insert(tokens.end(), parts.begin(), parts.end());
        continue;
      }
    }

    if (media) {
      if (IsMachineTag(trimmed)) continue;
      if (std::optional<std::string> stem = MediaFileStem(trimmed)) {
        if (IsAutoGeneratedFileName(trimmed)) continue;
        std::string lower = ToLower(*stem);
        if (IsEnglishWord(lower)) tokens.push_back(std::move(lower));
        continue;
      }
    }

    if (trimmed.empty()) continue;
    tokens.push_back(ToLower(trimmed));
  }

  std::string content;
  for (const std::string& token : tokens) {
    if (token == kMentionToken) continue;
    if (!content.empty()) content += ' ';
    content += token;
  }
  utterance.non_english = !content.empty() && !IsEnglish(content, options);
  if (utterance.non_english) tokens.clear();
  utterance.normalized = std::move(tokens);
  return utterance;
}

std::vector<Utterance> ParseUtteranceCorpus(std::string_view text) {
  std::vector<Utterance> utterances;
  std::set<std::string, std::less<>> ids;
  ForEachLine(text, [&](std::size_t number, std::string_view line) {
    std::string context = "utterance line " + std::to_string(number);
    std::vector<std::string> f = SplitTabs(line);
    if (f.size() != 5) throw InputError(context + ": expected 5 tab-separated fields");
    Utterance u;
    u.id = f[0];
    if (u.id.empty()) throw InputError(context + ": empty utterance id");
    if (!ids.insert(u.id).second) throw InputError(context + ": duplicate id " + u.id);
    u.platform = ParsePlatform(f[1]);
    u.kind = ParseUtteranceKind(f[2]);
    u.user = f[3];
    u.raw = UnescapeField(f[4]);
    utterances.push_back(std::move(u));
  });
  return utterances;
}

std::vector<Utterance> LoadUtteranceCorpus(const std::filesystem::path& path) {
  return ParseUtteranceCorpus(ReadFile(path));
}

std::string FormatUtteranceCorpus(std::span<const Utterance> utterances) {
  std::string out;
  for (const Utterance& u : utterances) {
    out += u.id;
    out += '\t';
    out += ToString(u.platform);
    out += '\t';
    out += ToString(u.kind);
    out += '\t';
    out += u.user;
    out += '\t';
    out += EscapeField(u.raw);
    out += '\n';
  }
  return out;
}

}  // namespace reslve
