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

#include "bged/reconcile.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "bged/error.hpp"
#include "bged/utf8.hpp"
#include "builtin_char_table.inc"

namespace bged {

void CharLookupTable::add(char32_t wrong, char32_t right) {
  if (wrong == right) throw std::invalid_argument("lookup entry maps a character to itself");
  if (wrong == U'$' || right == U'$') throw std::invalid_argument("'$' cannot appear in the lookup table");
  auto [it, inserted] = entries_.emplace(wrong, right);
  if (!inserted && it->second != right) {
    throw std::invalid_argument("character already mapped to a different value");
  }
}

std::optional<char32_t> CharLookupTable::find(char32_t wrong) const {
  auto it = entries_.find(wrong);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::vector<char32_t> CharLookupTable::sources_for(char32_t right) const {
  std::vector<char32_t> out;
  for (const auto& [k, v] : entries_) {
    if (v == right) out.push_back(k);
  }
  return out;
}

CharLookupTable CharLookupTable::parse(std::istream& in, const std::string& source) {
  CharLookupTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw FormatError(source, line_no, "expected two tab-separated columns");
    }
    std::u32string wrong, right;
    try {
      wrong = decode_utf8(std::string_view(line).substr(0, tab));
      right = decode_utf8(std::string_view(line).substr(tab + 1));
    } catch (const InvalidUtf8& e) {
      throw FormatError(source, line_no, e.what());
    }
    if (wrong.size() != 1 || right.size() != 1) {
      throw FormatError(source, line_no, "entries must be single characters");
    }
    try {
      table.add(wrong[0], right[0]);
    } catch (const std::invalid_argument& e) {
      throw FormatError(source, line_no, e.what());
    }
  }
  return table;
}

CharLookupTable CharLookupTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return parse(in, path.string());
}

const CharLookupTable& CharLookupTable::builtin() {
  static const CharLookupTable table = [] {
    std::istringstream in{std::string(kBuiltinCharTable)};
    return parse(in, "<builtin char table>");
  }();
  return table;
}

CharCorrectResult char_correct(std::string_view output, std::string_view input,
                               const CharLookupTable& table) {
  const std::u32string in = decode_utf8(input);
  const std::u32string out = decode_utf8(output);
  std::u32string result;
  result.reserve(out.size());
  std::size_t replacements = 0;
  std::size_t i = 0;  // input position
  std::size_t o = 0;  // output position
  while (i < in.size() || o < out.size()) {
    if (o < out.size()) {
      const char32_t c = out[o];
      if (i < in.size() && in[i] == c) {
        result.push_back(c);
        ++i, ++o;
        continue;
      }
      if (c == U'$') {
        result.push_back(c);
        ++o;
        continue;
      }
      if (i < in.size()) {
        const auto mapped = table.find(c);
        if (mapped && *mapped == in[i]) {
          result.push_back(in[i]);
          ++replacements;
          ++i, ++o;
          continue;
        }
      }
    }
    return Mismatch{i, o};
  }
  // An unpaired marker cannot be a valid marking of the input.
  if (std::count(out.begin(), out.end(), U'$') % 2 != 0) return Mismatch{in.size(), out.size()};
  return CharCorrection{encode_utf8(result), replacements};
}

namespace {

struct OutputToken {
  std::size_t core_begin = 0;  // after leading '$'
  std::size_t core_end = 0;    // before trailing '$'
  std::u32string key;          // core with any inner '$' removed
  bool inner_marker = false;
  bool marker_only = false;
};

std::vector<OutputToken> tokenize_output(const std::u32string& text) {
  std::vector<OutputToken> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    if (i == text.size()) break;
    std::size_t begin = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    std::size_t end = i;
    while (begin < end && text[begin] == U'$') ++begin;
    while (end > begin && text[end - 1] == U'$') --end;
    OutputToken tok;
    tok.core_begin = begin;
    tok.core_end = end;
    tok.marker_only = begin == end;
    for (std::size_t k = begin; k < end; ++k) {
      if (text[k] == U'$') {
        tok.inner_marker = true;
      } else {
        tok.key.push_back(text[k]);
      }
    }
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

std::vector<std::u32string> tokenize_input(const std::u32string& text) {
  std::vector<std::u32string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    if (i == text.size()) break;
    const std::size_t begin = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    tokens.push_back(text.substr(begin, i - begin));
  }
  return tokens;
}

// True when the cheapest token alignment, breaking ties toward substitution,
// pairs the sequences position by position.
bool aligns_by_substitution(const std::vector<const OutputToken*>& out,
                            const std::vector<std::u32string>& in) {
  const std::size_t n = out.size();
  const std::size_t m = in.size();
  std::vector<std::size_t> d((n + 1) * (m + 1));
  auto at = [&](std::size_t r, std::size_t c) -> std::size_t& { return d[r * (m + 1) + c]; };
  for (std::size_t r = 0; r <= n; ++r) at(r, 0) = r;
  for (std::size_t c = 0; c <= m; ++c) at(0, c) = c;
  for (std::size_t r = 1; r <= n; ++r) {
    for (std::size_t c = 1; c <= m; ++c) {
      const std::size_t sub = at(r - 1, c - 1) + (out[r - 1]->key == in[c - 1] ? 0 : 1);
      at(r, c) = std::min({sub, at(r - 1, c) + 1, at(r, c - 1) + 1});
    }
  }
  std::size_t r = n, c = m;
  while (r > 0 && c > 0) {
    const std::size_t cost = out[r - 1]->key == in[c - 1] ? 0 : 1;
    if (at(r, c) != at(r - 1, c - 1) + cost) return false;
    --r, --c;
  }
  return r == 0 && c == 0;
}

}  // namespace

WordCorrectResult word_correct(std::string_view output, std::string_view input) {
  const std::u32string out = decode_utf8(output);
  const std::u32string in = decode_utf8(input);
  const std::vector<OutputToken> tokens = tokenize_output(out);
  const std::vector<std::u32string> in_tokens = tokenize_input(in);

  std::vector<const OutputToken*> words;
  for (const auto& t : tokens) {
    if (!t.marker_only) words.push_back(&t);
  }
  if (words.size() != in_tokens.size()) {
    return AlignmentFailed{words.size(), in_tokens.size(), "token counts differ"};
  }
  if (!aligns_by_substitution(words, in_tokens)) {
    return AlignmentFailed{words.size(), in_tokens.size(),
                           "alignment needs word insertions or deletions"};
  }

  std::u32string result;
  result.reserve(in.size() + out.size());
  std::size_t copied = 0;
  for (std::size_t k = 0; k < words.size(); ++k) {
    const OutputToken& tok = *words[k];
    if (tok.key == in_tokens[k] || tok.inner_marker) continue;
    result.append(out, copied, tok.core_begin - copied);
    result.append(in_tokens[k]);
    copied = tok.core_end;
  }
  result.append(out, copied);
  return encode_utf8(result);
}

std::string_view to_string(ReconcileStage stage) {
  switch (stage) {
    case ReconcileStage::kCharLevel:
      return "CharLevel";
    case ReconcileStage::kWordLevel:
      return "WordLevel";
    case ReconcileStage::kRegexFallback:
      return "RegexFallback";
  }
  return "?";
}

ReconcileOutcome reconcile(std::string_view output, std::string_view input,
                           const CharLookupTable& table, const RuleSet& rules) {
  CharCorrectResult first = char_correct(output, input, table);
  if (auto* ok = std::get_if<CharCorrection>(&first)) {
    return {std::move(ok->text), ReconcileStage::kCharLevel, ok->replacements};
  }
  // Word correction is attempted once per sentence.
  WordCorrectResult words = word_correct(output, input);
  if (auto* respelled = std::get_if<std::string>(&words)) {
    CharCorrectResult second = char_correct(*respelled, input, table);
    if (auto* ok = std::get_if<CharCorrection>(&second)) {
      return {std::move(ok->text), ReconcileStage::kWordLevel, ok->replacements};
    }
  }
  return {regex_correction(input, rules), ReconcileStage::kRegexFallback, 0};
}

}  // namespace bged
