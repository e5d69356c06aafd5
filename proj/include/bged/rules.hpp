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

#ifndef BGED_RULES_HPP_
#define BGED_RULES_HPP_

#include <cstddef>
#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bged/corpus.hpp"
#include "bged/textnorm.hpp"

namespace bged {

// Words that are always marked as errors plus literal substring patterns.
// Both lists are deduplicated and kept longest-first (ties in byte order);
// entries are non-empty and never contain '$'.
class RuleSet {
 public:
  RuleSet() = default;
  // Throws std::invalid_argument on an empty entry or one containing '$'.
  RuleSet(std::vector<std::string> common_error_words, std::vector<std::string> literal_rules);

  const std::vector<std::string>& common_error_words() const { return words_; }
  const std::vector<std::string>& literal_rules() const { return literals_; }
  bool empty() const { return words_.empty() && literals_.empty(); }

  RuleSet merged(const RuleSet& other) const;
  // Every entry passed through normalize(); entries that collide are merged.
  RuleSet normalized(const NormConfig& cfg) const;

  friend bool operator==(const RuleSet&, const RuleSet&) = default;

 private:
  std::vector<std::string> words_;
  std::vector<std::string> literals_;
};

// JSON object with string arrays `common_error_words` and `literal_rules`.
std::string to_json(const RuleSet& rules);
RuleSet rules_from_json(std::string_view json);
RuleSet load_rules(const std::filesystem::path& path);
void save_rules(const RuleSet& rules, const std::filesystem::path& path);

// Substring-rule detection used when reconciliation gives up. Whole-token
// occurrences of common_error_words are wrapped first, then literal_rules,
// longest first, scanning left to right. A character already inside a
// produced span is never wrapped again. Throws MarkedInput if the sentence
// already contains '$'.
std::string regex_correction(std::string_view sentence, const RuleSet& rules);

struct MiningConfig {
  std::size_t min_support = 3;
  double min_precision = 0.95;

  // Throws std::invalid_argument unless min_support >= 1 and
  // 0 < min_precision <= 1.
  void validate() const;
};

// Tokens are whitespace-delimited with surrounding punctuation trimmed. A
// token occurrence counts as in-span when a gold span fully covers it. Keeps
// tokens with in-span count >= min_support and in-span/total >= min_precision
// (both bounds inclusive). Throws MissingGold.
RuleSet mine_common_errors(std::span<const CorpusRecord> train, const MiningConfig& cfg);

// One token per line. Blank lines are skipped and reported in
// skipped_lines (1-based) when given.
std::set<std::string> load_wordlist(const std::filesystem::path& path,
                                    std::vector<std::size_t>* skipped_lines = nullptr);

}  // namespace bged

#endif  // BGED_RULES_HPP_
