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


#include "reslve/tsv.h"

#include <gtest/gtest.h>

#include "reslve/errors.h"

namespace reslve {
namespace {

TEST(TsvTest, SplitKeepsEmptyFields) {
  EXPECT_EQ(SplitTabs("a\t\tb\t"), (std::vector<std::string>{"a", "", "b", ""}));
}

TEST(TsvTest, EscapeRoundTrip) {
  const std::string raw = "tab\there\nnew line \\ back\rslash";
  std::string escaped = EscapeField(raw);
  EXPECT_EQ(escaped.find('\t'), std::string::npos);
  EXPECT_EQ(escaped.find('\n'), std::string::npos);
  EXPECT_EQ(UnescapeField(escaped), raw);
}

TEST(TsvTest, NumbersRejectTrailingGarbage) {
  EXPECT_DOUBLE_EQ(ParseDouble(" 0.25 ", "x"), 0.25);
  EXPECT_THROW(ParseDouble("0.25x", "x"), InputError);
  EXPECT_THROW(ParseDouble("", "x"), InputError);
  EXPECT_EQ(ParseInt("-12", "x"), -12);
  EXPECT_THROW(ParseInt("1.5", "x"), InputError);
}

TEST(TsvTest, FormatDoubleIsShortestRoundTrip) {
  EXPECT_EQ(FormatDouble(0.5), "0.5");
  double third = 1.0 / 3.0;
  EXPECT_EQ(ParseDouble(FormatDouble(third), "x"), third);
}

TEST(TsvTest, ForEachLineSkipsBlankAndComments) {
  std::vector<std::size_t> numbers;
  ForEachLine("# head\n\nfirst\r\nsecond", [&](std::size_t n, std::string_view line) {
    numbers.push_back(n);
    EXPECT_EQ(line.find('\r'), std::string_view::npos);
  });
  EXPECT_EQ(numbers, (std::vector<std::size_t>{3, 4}));
}

}  // namespace
}  // namespace reslve
