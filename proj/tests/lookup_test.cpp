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

#include <sstream>

#include "bged/corpus.hpp"
#include "bged/error.hpp"
#include "bged/lookup.hpp"
#include "support.hpp"

namespace bged {
namespace {

CorpusRecord rec(std::string id, std::string gold) {
  const MarkedSentence m = parse_marked(gold);
  return {std::move(id), m.plain(), m};
}

TEST(BuildLookup, DistinctRecords) {
  const std::vector<CorpusRecord> train{rec("a", "আমি $ভাত$ খাই"), rec("b", "সে যায়$$")};
  const SentenceLookup t = build_lookup(train, NormConfig{});
  EXPECT_EQ(t.size(), 2u);
  EXPECT_TRUE(t.conflicts().empty());
  EXPECT_EQ(find("আমি ভাত খাই", t, NormConfig{}), "আমি $ভাত$ খাই");
  EXPECT_FALSE(find("unseen", t, NormConfig{}).has_value());
}

TEST(BuildLookup, DuplicateIdenticalGold) {
  const std::vector<CorpusRecord> train{rec("a", "x $y$"), rec("b", "x $y$")};
  const SentenceLookup t = build_lookup(train, NormConfig{});
  EXPECT_EQ(t.size(), 1u);
  EXPECT_TRUE(t.conflicts().empty());
}

TEST(BuildLookup, ConflictKeepsFirst) {
  const std::vector<CorpusRecord> train{rec("a", "x $y$"), rec("b", "$x$ y")};
  const SentenceLookup t = build_lookup(train, NormConfig{});
  EXPECT_EQ(t.size(), 1u);
  ASSERT_EQ(t.conflicts().size(), 1u);
  EXPECT_EQ(t.conflicts()[0], "x y");
  EXPECT_EQ(find("x y", t, NormConfig{}), "x $y$");
}

TEST(BuildLookup, QueryIsNormalized) {
  // Decomposed o-kar in the training gold; keys and values are stored in NFC.
  const std::vector<CorpusRecord> train{rec("a", "\u0995\u09C7\u09BE $\u09AD\u09BE\u09A4$")};
  const SentenceLookup t = build_lookup(train, NormConfig{});
  const std::string want = "\u0995\u09CB $\u09AD\u09BE\u09A4$";
  EXPECT_EQ(find("\u0995\u09CB \u09AD\u09BE\u09A4", t, NormConfig{}), want);
  EXPECT_EQ(find("\u0995\u09C7\u09BE\n\u09AD\u09BE\u09A4", t, NormConfig{}), want);
  EXPECT_EQ(find("\u0995\u09CB  \u09AD\u09BE\u09A4", t, NormConfig{}), std::nullopt);
}

TEST(BuildLookup, MissingGold) {
  std::vector<CorpusRecord> train{{"a", "x", std::nullopt}};
  EXPECT_THROW(build_lookup(train, NormConfig{}), MissingGold);
}

TEST(SentenceLookup, InsertRejectsNonMarking) {
  SentenceLookup t;
  EXPECT_TRUE(t.insert("ab", "$a$b"));
  EXPECT_THROW(t.insert("ab", "$a$c"), std::invalid_argument);
}

TEST(LookupIo, RoundTrip) {
  const std::vector<CorpusRecord> train{rec("a", "আমি $ভাত$ খাই"), rec("b", "p q$$")};
  const SentenceLookup t = build_lookup(train, NormConfig{});
  std::ostringstream out;
  write_lookup(out, t);
  std::istringstream in(out.str());
  EXPECT_EQ(read_lookup(in, "l.tsv").entries(), t.entries());

  std::istringstream bad("plain\tmarked\nab\t$a$c\n");
  EXPECT_THROW(read_lookup(bad, "l.tsv"), FormatError);
}

TEST(LookupProperty, ReplayReturnsGold) {
  testing::Gen gen(51);
  for (int round = 0; round < 100; ++round) {
    std::vector<CorpusRecord> train;
    for (std::size_t i = gen.size(0, 40); i > 0; --i) {
      train.push_back(rec("r" + std::to_string(train.size()), gen.even_marked(6)));
    }
    const SentenceLookup t = build_lookup(train, NormConfig{});
    const SentenceLookup again = build_lookup(train, NormConfig{});
    ASSERT_EQ(t.entries(), again.entries());
    std::set<std::string> conflicted(t.conflicts().begin(), t.conflicts().end());
    for (const CorpusRecord& r : train) {
      const auto hit = find(r.input, t, NormConfig{});
      ASSERT_TRUE(hit.has_value());
      ASSERT_EQ(strip_markers(*hit), normalize(r.input, NormConfig{}));
      if (!conflicted.count(normalize(r.input, NormConfig{}))) {
        ASSERT_EQ(*hit, normalize(r.gold->raw(), NormConfig{}));
      }
    }
  }
}

}  // namespace
}  // namespace bged
