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
#include "bged/reconcile.hpp"
#include "bged/rules.hpp"
#include "bged/simgen.hpp"
#include "support.hpp"

namespace bged {
namespace {

CharLookupTable table_of(std::initializer_list<std::pair<char32_t, char32_t>> pairs) {
  CharLookupTable t;
  for (auto [w, r] : pairs) t.add(w, r);
  return t;
}

TEST(CharLookupTable, AddRules) {
  CharLookupTable t;
  t.add(U'x', U'b');
  t.add(U'y', U'b');
  EXPECT_EQ(t.find(U'x'), U'b');
  EXPECT_FALSE(t.find(U'b').has_value());
  EXPECT_EQ(t.sources_for(U'b'), (std::vector<char32_t>{U'x', U'y'}));
  EXPECT_NO_THROW(t.add(U'x', U'b'));
  EXPECT_THROW(t.add(U'x', U'c'), std::invalid_argument);
  EXPECT_THROW(t.add(U'q', U'q'), std::invalid_argument);
  EXPECT_THROW(t.add(U'$', U'q'), std::invalid_argument);
  EXPECT_THROW(t.add(U'q', U'$'), std::invalid_argument);
}

TEST(CharLookupTable, ParseAndBuiltin) {
  std::istringstream in("# comment\n|\t।\n\nঈ\tই\n");
  const CharLookupTable t = CharLookupTable::parse(in, "t.tsv");
  EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(t.find(U'|'), U'।');
  EXPECT_EQ(t.find(U'ঈ'), U'ই');

  std::istringstream bad("ab\tc\n");
  try {
    CharLookupTable::parse(bad, "bad.tsv");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line_no(), 1u);
  }
  const CharLookupTable& b = CharLookupTable::builtin();
  EXPECT_GE(b.size(), 16u);
  EXPECT_EQ(b.find(U'ী'), U'ি');  // dirgho-i sign read as hrosso-i
  EXPECT_EQ(b.find(U'|'), U'।');
}

TEST(CharCorrect, CleanOutputWithMarkers) {
  auto r = char_correct("the $cat$ sat", "the cat sat", {});
  ASSERT_TRUE(std::holds_alternative<CharCorrection>(r));
  EXPECT_EQ(std::get<CharCorrection>(r).text, "the $cat$ sat");
  EXPECT_EQ(std::get<CharCorrection>(r).replacements, 0u);
}

TEST(CharCorrect, TableSubstitution) {
  auto r = char_correct("a$x$c", "abc", table_of({{U'x', U'b'}}));
  ASSERT_TRUE(std::holds_alternative<CharCorrection>(r));
  EXPECT_EQ(std::get<CharCorrection>(r).text, "a$b$c");
  EXPECT_EQ(std::get<CharCorrection>(r).replacements, 1u);
}

TEST(CharCorrect, FirstDivergence) {
  auto r = char_correct("a$q$c", "abc", {});
  ASSERT_TRUE(std::holds_alternative<Mismatch>(r));
  EXPECT_EQ(std::get<Mismatch>(r), (Mismatch{1, 2}));
}

TEST(CharCorrect, TableIsDirectional) {
  // Only output->input lookups apply.
  auto r = char_correct("abc", "axc", table_of({{U'x', U'b'}}));
  EXPECT_TRUE(std::holds_alternative<Mismatch>(r));
}

TEST(CharCorrect, TrailingMarkersAppended) {
  auto r = char_correct("$ab$$$", "ab", {});
  ASSERT_TRUE(std::holds_alternative<CharCorrection>(r));
  EXPECT_EQ(std::get<CharCorrection>(r).text, "$ab$$$");
}

TEST(CharCorrect, ShortOutputAndOddMarkers) {
  EXPECT_TRUE(std::holds_alternative<Mismatch>(char_correct("ab", "abc", {})));
  EXPECT_TRUE(std::holds_alternative<Mismatch>(char_correct("abcd", "abc", {})));
  auto r = char_correct("a$bc", "abc", {});
  ASSERT_TRUE(std::holds_alternative<Mismatch>(r));
  EXPECT_EQ(std::get<Mismatch>(r), (Mismatch{3, 4}));
}

TEST(WordCorrect, SubstitutesAlignedWord) {
  auto r = word_correct("colour is $red$", "color is red");
  ASSERT_TRUE(std::holds_alternative<std::string>(r));
  EXPECT_EQ(std::get<std::string>(r), "color is $red$");
}

TEST(WordCorrect, KeepsOuterMarkersOfReplacedWord) {
  auto r = word_correct("আমি $ভাল$ আছি", "আমি ভালো আছি");
  ASSERT_TRUE(std::holds_alternative<std::string>(r));
  EXPECT_EQ(std::get<std::string>(r), "আমি $ভালো$ আছি");
}

TEST(WordCorrect, IdentityWhenAligned) {
  auto r = word_correct("a $b c$ d$$", "a b c d");
  ASSERT_TRUE(std::holds_alternative<std::string>(r));
  EXPECT_EQ(std::get<std::string>(r), "a $b c$ d$$");
}

TEST(WordCorrect, TokenCountDiffers) {
  auto r = word_correct("a b", "a b c");
  ASSERT_TRUE(std::holds_alternative<AlignmentFailed>(r));
  EXPECT_EQ(std::get<AlignmentFailed>(r).output_tokens, 2u);
  EXPECT_EQ(std::get<AlignmentFailed>(r).input_tokens, 3u);
}

TEST(Reconcile, Stages) {
  const CharLookupTable& table = CharLookupTable::builtin();
  const RuleSet rules({"খাইলাম"}, {});

  auto clean = reconcile("আমি $ভাত$ খাই", "আমি ভাত খাই", table, rules);
  EXPECT_EQ(clean.stage, ReconcileStage::kCharLevel);
  EXPECT_EQ(clean.result, "আমি $ভাত$ খাই");

  auto word = reconcile("colour is $red$", "color is red", table, rules);
  EXPECT_EQ(word.stage, ReconcileStage::kWordLevel);
  EXPECT_EQ(word.result, "color is $red$");

  auto cut = reconcile("আমি $খাইলাম$", "আমি ভাত খাইলাম আজ", table, rules);
  EXPECT_EQ(cut.stage, ReconcileStage::kRegexFallback);
  EXPECT_EQ(cut.result, "আমি ভাত $খাইলাম$ আজ");
}

TEST(Reconcile, TableSwapRecovered) {
  // Model wrote dirgho-i where the input has hrosso-i.
  auto r = reconcile("$কী$ খবর", "কি খবর",
                     CharLookupTable::builtin(), {});
  EXPECT_EQ(r.stage, ReconcileStage::kCharLevel);
  EXPECT_EQ(r.result, "$কি$ খবর");
  EXPECT_EQ(r.replacements, 1u);
}

// Random outputs against random inputs: whatever stage is reached the result
// is a marking of the input.
TEST(ReconcileProperty, Soundness) {
  testing::Gen gen(31);
  const CharLookupTable table = table_of({{U'z', U'a'}, {U'ঈ', U'ই'}, {U'|', U'।'}});
  const RuleSet rules({"ab", "ই"}, {"c"});
  for (int i = 0; i < 4000; ++i) {
    const std::string input = gen.utf8(16);
    std::string output;
    switch (gen.size(0, 2)) {
      case 0: output = gen.even_marked(16); break;
      case 1: {
        // Input with a few markers and table swaps.
        std::u32string s = decode_utf8(input);
        for (char32_t& c : s) {
          if (c == U'a' && gen.coin()) c = U'z';
        }
        for (int k = 0; k < 2; ++k) s.insert(gen.size(0, s.size()), 1, U'$');
        output = encode_utf8(s);
        break;
      }
      default: output = gen.utf8(16, true);
    }
    const ReconcileOutcome a = reconcile(output, input, table, rules);
    const ReconcileOutcome b = reconcile(output, input, table, rules);
    ASSERT_EQ(a.result, b.result);
    ASSERT_EQ(a.stage, b.stage);
    ASSERT_EQ(testing::drop_dollars(a.result), input) << output;
    ASSERT_EQ(testing::dollars(a.result) % 2, 0u);
    if (a.stage != ReconcileStage::kRegexFallback) {
      ASSERT_EQ(testing::dollars(a.result), testing::dollars(output));
    }
  }
}

TEST(ReconcileProperty, InvertibleSwapsRecovered) {
  testing::Gen gen(32);
  const CharLookupTable& table = CharLookupTable::builtin();
  DegradeConfig cfg;
  cfg.truncate_at_tokens.reset();
  for (int i = 0; i < 1000; ++i) {
    cfg.char_swap_rate = gen.coin(0.2) ? 1.0 : 0.3;
    cfg.seed = i;
    const std::string plain = "আমি ঈদে বাড়ি যাই। ঊষা দূরে শীতে | ষ ণ য";
    const std::u32string p = decode_utf8(plain);
    std::vector<Span> spans;
    std::size_t pos = 0;
    while (pos < p.size()) {
      const std::size_t start = gen.size(pos, p.size());
      const std::size_t end = gen.size(start, std::min(p.size(), start + 4));
      if (gen.coin(0.4)) spans.push_back({start, end});
      pos = end + 1;
    }
    const MarkedSentence gold = MarkedSentence::from_spans(plain, spans);
    const std::string out = degrade(gold, cfg, table);
    const ReconcileOutcome r = reconcile(out, plain, table, {});
    ASSERT_EQ(r.stage, ReconcileStage::kCharLevel) << out;
    ASSERT_EQ(r.result, gold.raw());
  }
}

}  // namespace
}  // namespace bged
