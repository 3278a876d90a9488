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

#ifndef RESLVE_TSV_H_
#define RESLVE_TSV_H_

// Helpers for the line-oriented, tab-separated file formats.

#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace reslve {

std::vector<std::string> SplitTabs(std::string_view line);
std::vector<std::string> SplitWhitespace(std::string_view text);

// Backslash escaping for free text in a tab-separated column: \t \n \r \\.
std::string EscapeField(std::string_view text);
std::string UnescapeField(std::string_view text);

std::string Trim(std::string_view text);
std::string ToLower(std::string_view text);

// Calls visit(line_number, line) for every non-blank line that does not start
// with '#'. Line numbers are 1-based. Throws InputError if the file cannot be
// opened.
void ForEachRecord(
    const std::filesystem::path& path,
    const std::function<void(std::size_t, std::string_view)>& visit);

// Same iteration over in-memory text.
void ForEachLine(std::string_view text,
                 const std::function<void(std::size_t, std::string_view)>& visit);

std::string ReadFile(const std::filesystem::path& path);

// Writes through a temporary file and renames, so readers never see a
// partially written output.
void WriteFileAtomic(const std::filesystem::path& path, std::string_view data);

// Formats a real number with the shortest round-trip representation.
std::string FormatDouble(double value);

// Parses a real number; throws InputError with the given context on failure.
double ParseDouble(std::string_view text, std::string_view context);
long long ParseInt(std::string_view text, std::string_view context);

}  // namespace reslve

#endif  // RESLVE_TSV_H_
