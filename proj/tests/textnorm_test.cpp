// Copyright 2026 The bangla-ged Authors.
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

#include <gtest/gtest.h>

#include "bged/textnorm.hpp"
#include "support.hpp"

namespace bged {
namespace {

constexpr NormConfig kOff{false, false, false};

TEST(Normalize, NewlinesBecomeSpaces) {
  const NormConfig cfg;
  EXPECT_EQ(normalize("ab\ncd", cfg), "ab cd");
  EXPECT_EQ(normalize("ab\r\ncd", cfg), "ab cd");
  EXPECT_EQ(normalize("ab\rcd e f\u0085g", cfg), "ab cd e f g");
  EXPECT_EQ(normalize("ab\ncd", NormConfig{false, true, false}), "ab\ncd");
}

// Expected values taken from Python's unicodedata.normalize("NFC", ...).
TEST(Normalize, NfcAgainstReference) {
  const NormConfig cfg;
  // U+09DC is a composition exclusion: NFC keeps the pair decomposed.
  EXPECT_EQ(normalize("\u09A1\u09BC", cfg), "\u09A1\u09BC");
  EXPECT_EQ(normalize("\u09DC", cfg), "\u09A1\u09BC");
  EXPECT_EQ(normalize("\u09DF", cfg), "\u09AF\u09BC");
  // Two-part vowel signs do compose.
  EXPECT_EQ(normalize("\u0995\u09C7\u09BE", cfg), "\u0995\u09CB");
  EXPECT_EQ(normalize("\u0995\u09C7\u09D7", cfg), "\u0995\u09CC");
  EXPECT_EQ(normalize("e\u0301", cfg), "\u00E9");
  EXPECT_EQ(normalize("\u0995\u09C7\u09BE", NormConfig{true, false, false}),
            "\u0995\u09C7\u09BE");
}

TEST(Normalize, CollapseSpacesIsOptIn) {
  EXPECT_EQ(normalize("a  b   c", NormConfig{}), "a  b   c");
  EXPECT_EQ(normalize("a  b   c", NormConfig{true, true, true}), "a b c");
  EXPECT_EQ(normalize("a \n b", NormConfig{true, true, true}), "a b");
}

TEST(Normalize, AlreadyNormalUnchanged) {
  const std::string s = "আমি $ভাত$ খাই। school";
  EXPECT_EQ(normalize(s, NormConfig{}), s);
}

TEST(NormalizeProperty, IdempotentMarkerPreservingIdentityWhenOff) {
  testing::Gen gen(21);
  const std::vector<NormConfig> configs = {
      {true, true, false}, {true, true, true}, {false, true, false}, {true, false, true}};
  const std::vector<std::string> extras = {"\n", "\r\n", "\r", "  ", "\u09C7\u09BE",
                                           "\u09DC", "e\u0301", "\u2028"};
  for (int i = 0; i < 2000; ++i) {
    std::string t = gen.utf8(20, true);
    const std::size_t inserts = gen.size(0, 3);
    for (std::size_t k = 0; k < inserts; ++k) t += gen.pick(extras) + gen.utf8(4, true);
    ASSERT_EQ(normalize(t, kOff), t);
    for (const NormConfig& cfg : configs) {
      const std::string once = normalize(t, cfg);
      ASSERT_EQ(normalize(once, cfg), once);
      ASSERT_EQ(testing::dollars(once), testing::dollars(t));
    }
  }
}

}  // namespace
}  // namespace bged
