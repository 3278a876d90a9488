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

#ifndef RESLVE_PORTER_STEMMER_H_
#define RESLVE_PORTER_STEMMER_H_

#include <string>
#include <string_view>

namespace reslve {

// Porter (1980) suffix-stripping stemmer, following the reference ANSI C
// implementation. Input is expected to be a lowercase ASCII word; words of
// two characters or fewer are returned unchanged.
std::string PorterStem(std::string_view word);

}  // namespace reslve

#endif  // RESLVE_PORTER_STEMMER_H_
