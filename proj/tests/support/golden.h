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


#ifndef RESLVE_TESTS_SUPPORT_GOLDEN_H_
#define RESLVE_TESTS_SUPPORT_GOLDEN_H_

#include <array>
#include <string>
#include <string_view>

#include "reslve/text_pipeline.h"

namespace reslve::testing {

// One golden pair per normalization rule under golden/preprocess.
inline constexpr std::array<std::string_view, 8> kPreprocessRules = {
    "twitter_mention",   "twitter_retweet",    "twitter_hashtag",
    "media_generated_filename", "media_file_suffix", "flickr_machine_tag",
    "all_urls",          "all_non_english"};

// "<id>\t<tokens joined by spaces>" per utterance, or "[non-english]".
inline std::string RenderPreprocessGolden(std::string_view corpus) {
  std::string out;
  for (const Utterance& raw : ParseUtteranceCorpus(corpus)) {
    Utterance u = PreprocessUtterance(raw);
    out += u.id;
    out += '\t';
    if (u.non_english) {
      out += "[non-english]";
    } else {
      for (std::size_t i = 0; i < u.normalized.size(); ++i) {
        if (i > 0) out += ' ';
        out += u.normalized[i];
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace reslve::testing

#endif  // RESLVE_TESTS_SUPPORT_GOLDEN_H_
