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

#ifndef BGED_RECONCILE_HPP_
#define BGED_RECONCILE_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bged/rules.hpp"

namespace bged {

// Maps a character the model emits to the input character it stands for.
// Single scalar values only; no entry maps a character to itself and '$' is
// never a key or a value.
class CharLookupTable {
 public:
  CharLookupTable() = default;

  // Throws std::invalid_argument for identity or '$' entries, and when wrong
  // is already mapped to a different character.
  void add(char32_t wrong, char32_t right);

  std::optional<char32_t> find(char32_t wrong) const;
  // Keys whose value is right, ascending. Used to invert the table.
  std::vector<char32_t> sources_for(char32_t right) const;

  const std::map<char32_t, char32_t>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // `wrong<TAB>right` per line; '#' lines and blank lines are ignored.
  static CharLookupTable parse(std::istream& in, const std::string& source);
  static CharLookupTable load(const std::filesystem::path& path);
  // The Bangla confusion table shipped in data/char_table.tsv.
  static const CharLookupTable& builtin();

 private:
  std::map<char32_t, char32_t> entries_;
};

// First position pair (scalar-value indices) the character scan could not
// resolve.
struct Mismatch {
  std::size_t input_pos = 0;
  std::size_t output_pos = 0;
  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct CharCorrection {
  std::string text;
  std::size_t replacements = 0;  // lookup-table substitutions applied
};

using CharCorrectResult = std::variant<CharCorrection, Mismatch>;

// Walks input and model output in lockstep. Equal characters are copied, a
// '$' in the output is copied, and a differing output character is accepted
// when table[output] equals the input character. Remaining output '$' are
// appended once the input is exhausted. On success the result strips to input
// exactly. An output with an odd number of '$' never succeeds; it reports a
// Mismatch at the two end positions.
CharCorrectResult char_correct(std::string_view output, std::string_view input,
                               const CharLookupTable& table);

struct AlignmentFailed {
  std::size_t output_tokens = 0;
  std::size_t input_tokens = 0;
  std::string reason;
};

using WordCorrectResult = std::variant<std::string, AlignmentFailed>;

// Replaces whole words of the output with the input words they align to.
// Marker-only tokens are left alone; leading and trailing '$' of a replaced
// token are kept. Alignment is token edit distance preferring substitution on
// ties; an alignment that needs insertions or deletions is reported as
// AlignmentFailed, as is any difference in token count.
WordCorrectResult word_correct(std::string_view output, std::string_view input);

enum class ReconcileStage { kCharLevel, kWordLevel, kRegexFallback };

std::string_view to_string(ReconcileStage stage);

struct ReconcileOutcome {
  std::string result;
  ReconcileStage stage = ReconcileStage::kCharLevel;
  std::size_t replacements = 0;
};

// char_correct; on a mismatch one round of word_correct followed by
// char_correct; if that fails too, regex_correction on the input.
ReconcileOutcome reconcile(std::string_view output, std::string_view input,
                           const CharLookupTable& table, const RuleSet& rules);

}  // namespace bged

#endif  // BGED_RECONCILE_HPP_
