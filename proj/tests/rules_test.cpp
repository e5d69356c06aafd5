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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "bged/corpus.hpp"
#include "bged/error.hpp"
#include "bged/rules.hpp"
#include "support.hpp"

namespace bged {
namespace {

std::vector<CorpusRecord> train_of(const std::vector<std::string>& golds) {
  std::vector<CorpusRecord> out;
  for (std::size_t i = 0; i < golds.size(); ++i) {
    const MarkedSentence m = parse_marked(golds[i]);
    out.push_back({"r" + std::to_string(i), m.plain(), m});
  }
  return out;
}

TEST(RuleSet, OrderedLongestFirstWithoutDuplicates) {
  const RuleSet r({"ab", "abcd", "b", "ab", "zz"}, {"x", "xyz"});
  EXPECT_EQ(r.common_error_words(), (std::vector<std::string>{"abcd", "ab", "zz", "b"}));
  EXPECT_EQ(r.literal_rules(), (std::vector<std::string>{"xyz", "x"}));
  EXPECT_THROW(RuleSet({""}, {}), std::invalid_argument);
  EXPECT_THROW(RuleSet({}, {"a$"}), std::invalid_argument);
}

TEST(RuleSet, LengthCountsScalarsNotBytes) {
  // Three Bangla scalars are nine bytes but shorter than four ASCII letters.
  const RuleSet r({"আমি", "abcd"}, {});
  EXPECT_EQ(r.common_error_words().front(), "abcd");
}

TEST(RuleSet, JsonRoundTrip) {
  const RuleSet r({"করিতেছি", "বলিলাম"}, {"ইতেছ"});
  EXPECT_EQ(rules_from_json(to_json(r)), r);
  EXPECT_THROW(rules_from_json("[1,2]"), Error);
  EXPECT_THROW(rules_from_json("{\"common_error_words\": [3]}"), Error);
}

TEST(RegexCorrection, WrapsRuleWord) {
  const RuleSet r({"করিতেছি"}, {});
  EXPECT_EQ(regex_correction("আমি কাজ করিতেছি।", r), "আমি কাজ $করিতেছি$।");
  EXPECT_EQ(regex_correction("আমি কাজ করি।", r), "আমি কাজ করি।");
}

TEST(RegexCorrection, WholeTokensOnlyForWords) {
  const RuleSet r({"ab"}, {});
  EXPECT_EQ(regex_correction("xab ab, ab", r), "xab $ab$, $ab$");
}

TEST(RegexCorrection, NoNestingInsideProducedSpan) {
  const RuleSet r({}, {"ab", "abc"});
  EXPECT_EQ(regex_correction("xabcx ab", r), "x$abc$x $ab$");
}

TEST(RegexCorrection, RejectsMarkedInput) {
  EXPECT_THROW(regex_correction("a $b$", RuleSet({"a"}, {})), MarkedInput);
}

TEST(RegexCorrectionProperty, MarkingOfInputWithRuleContents) {
  testing::Gen gen(41);
  const std::vector<std::string> pool = {"a", "ab", "ba", "x", "আ", "কখ", "b a"};
  for (int i = 0; i < 3000; ++i) {
    std::vector<std::string> words, lits;
    for (std::size_t k = gen.size(0, 3); k > 0; --k) words.push_back(gen.pick(pool));
    for (std::size_t k = gen.size(0, 3); k > 0; --k) lits.push_back(gen.pick(pool));
    const RuleSet rules(words, lits);
    std::string s;
    for (std::size_t k = gen.size(0, 8); k > 0; --k) {
      s += gen.pick(pool);
      if (gen.coin()) s += gen.coin() ? " " : ",";
    }
    const std::string out = regex_correction(s, rules);
    ASSERT_EQ(testing::drop_dollars(out), s);
    const MarkedSentence m = parse_marked(out);
    const std::u32string plain = decode_utf8(m.plain());
    std::set<std::string> allowed(words.begin(), words.end());
    allowed.insert(lits.begin(), lits.end());
    for (const Span& sp : m.spans()) {
      ASSERT_FALSE(sp.empty());
      ASSERT_TRUE(allowed.count(encode_utf8(plain.substr(sp.start, sp.length())))) << out;
    }
  }
}

TEST(Mining, ToyCorpus) {
  std::vector<std::string> golds;
  for (int i = 0; i < 5; ++i) golds.push_back("p $X$ q");
  for (int i = 0; i < 10; ++i) golds.push_back("Y r");
  const RuleSet r = mine_common_errors(train_of(golds), MiningConfig{3, 0.9});
  EXPECT_EQ(r.common_error_words(), (std::vector<std::string>{"X"}));
  EXPECT_TRUE(r.literal_rules().empty());
}

TEST(Mining, EmptyCorpus) {
  EXPECT_TRUE(mine_common_errors({}, MiningConfig{}).empty());
}

TEST(Mining, BoundsAreInclusive) {
  // 19 of 20 occurrences in span: precision exactly 0.95.
  std::vector<std::string> golds;
  for (int i = 0; i < 19; ++i) golds.push_back("$w$ k");
  golds.push_back("w k");
  EXPECT_EQ(mine_common_errors(train_of(golds), MiningConfig{19, 0.95}).common_error_words(),
            (std::vector<std::string>{"w"}));
  EXPECT_TRUE(mine_common_errors(train_of(golds), MiningConfig{20, 0.95}).empty());
  EXPECT_TRUE(mine_common_errors(train_of(golds), MiningConfig{3, 0.951}).empty());
}

TEST(Mining, PartialCoverDoesNotCount) {
  const std::vector<std::string> golds(5, "$ab$cd ef।");
  EXPECT_TRUE(mine_common_errors(train_of(golds), MiningConfig{1, 0.5}).empty());
  const std::vector<std::string> trimmed(5, "x $ef$।");
  EXPECT_EQ(mine_common_errors(train_of(trimmed), MiningConfig{1, 0.5}).common_error_words(),
            (std::vector<std::string>{"ef"}));
}

TEST(Mining, ConfigValidated) {
  EXPECT_THROW(mine_common_errors({}, MiningConfig{0, 0.5}), std::invalid_argument);
  EXPECT_THROW(mine_common_errors({}, MiningConfig{1, 0.0}), std::invalid_argument);
  EXPECT_THROW(mine_common_errors({}, MiningConfig{1, 1.5}), std::invalid_argument);
}

// Brute-force recount: scalar coverage flags from the raw text, tokens split
// on spaces with ".,।" trimmed.
std::map<std::string, std::pair<std::size_t, std::size_t>> recount(
    const std::vector<std::string>& golds) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> counts;  // in-span, total
  const std::u32string trim = U".,।";
  for (const std::string& g : golds) {
    std::u32string plain;
    std::vector<bool> covered;
    bool inside = false;
    for (char32_t c : decode_utf8(g)) {
      if (c == U'$') {
        inside = !inside;
        continue;
      }
      plain += c;
      covered.push_back(inside);
    }
    std::size_t i = 0;
    while (i < plain.size()) {
      if (plain[i] == U' ') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < plain.size() && plain[j] != U' ') ++j;
      std::size_t a = i, b = j;
      while (a < b && trim.find(plain[a]) != std::u32string::npos) ++a;
      while (b > a && trim.find(plain[b - 1]) != std::u32string::npos) --b;
      if (a < b) {
        auto& [in, total] = counts[encode_utf8(plain.substr(a, b - a))];
        ++total;
        if (std::all_of(covered.begin() + a, covered.begin() + b, [](bool f) { return f; })) ++in;
      }
      i = j;
    }
  }
  return counts;
}

TEST(MiningProperty, MatchesRecountAndIgnoresOrder) {
  testing::Gen gen(42);
  const std::vector<std::string> vocab = {"ক", "খগ", "আমি", "ab", "c", "ভাত", "যাই", "z"};
  for (int round = 0; round < 150; ++round) {
    std::vector<std::string> golds;
    for (std::size_t n = gen.size(0, 30); n > 0; --n) {
      std::string plain;
      std::vector<std::string> toks;
      for (std::size_t k = gen.size(1, 6); k > 0; --k) {
        std::string t = gen.pick(vocab);
        if (gen.coin(0.15)) t += gen.coin() ? "," : "।";
        toks.push_back(t);
      }
      std::u32string p;
      for (std::size_t k = 0; k < toks.size(); ++k) {
        if (k) p += U' ';
        p += decode_utf8(toks[k]);
      }
      std::vector<Span> spans;
      std::size_t pos = 0;
      while (pos < p.size()) {
        const std::size_t s = gen.size(pos, p.size());
        const std::size_t e = gen.size(s, std::min(p.size(), s + 6));
        if (gen.coin(0.5)) spans.push_back({s, e});
        pos = e + 1;
      }
      golds.push_back(MarkedSentence::from_spans(encode_utf8(p), spans).raw());
    }
    const MiningConfig cfg{gen.size(1, 4), gen.pick(std::vector<double>{0.5, 0.75, 0.9, 1.0})};
    auto train = train_of(golds);
    const RuleSet mined = mine_common_errors(train, cfg);

    std::set<std::string> expected;
    for (const auto& [tok, c] : recount(golds)) {
      if (c.first >= cfg.min_support &&
          static_cast<double>(c.first) / static_cast<double>(c.second) >= cfg.min_precision) {
        expected.insert(tok);
      }
    }
    const auto& got = mined.common_error_words();
    ASSERT_EQ(std::set<std::string>(got.begin(), got.end()), expected);

    std::shuffle(train.begin(), train.end(), gen.engine());
    ASSERT_EQ(mine_common_errors(train, cfg), mined);
  }
}

class WordlistTest : public ::testing::Test {
 protected:
  std::filesystem::path write(const std::string& text) {
    const auto p = std::filesystem::temp_directory_path() /
                   ("bged_wordlist_" + std::to_string(counter_++) + ".txt");
    std::ofstream(p, std::ios::binary) << text;
    paths_.push_back(p);
    return p;
  }
  void TearDown() override {
    for (const auto& p : paths_) std::filesystem::remove(p);
  }

 private:
  std::vector<std::filesystem::path> paths_;
  int counter_ = 0;
};

TEST_F(WordlistTest, DuplicatesCollapseAndBlanksReported) {
  std::vector<std::size_t> skipped;
  const auto words = load_wordlist(write("করিতেছি\nবলিলাম\n\nকরিতেছি\n  \n"), &skipped);
  EXPECT_EQ(words, (std::set<std::string>{"করিতেছি", "বলিলাম"}));
  EXPECT_EQ(skipped, (std::vector<std::size_t>{3, 5}));
}

TEST_F(WordlistTest, EmptyFile) { EXPECT_TRUE(load_wordlist(write("")).empty()); }

TEST_F(WordlistTest, MarkerRejected) {
  try {
    load_wordlist(write("ok\nb$d\n"));
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line_no(), 2u);
  }
}

TEST_F(WordlistTest, ShippedSeedList) {
  const auto words = load_wordlist(BGED_SOURCE_DIR "/data/archaic_verbs.txt");
  EXPECT_FALSE(words.empty());
  EXPECT_LE(words.size(), 311u);
  EXPECT_TRUE(words.count("করিতেছি"));
}

}  // namespace
}  // namespace bged
