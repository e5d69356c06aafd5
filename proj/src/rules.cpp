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

#include "bged/rules.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "bged/error.hpp"
#include "bged/utf8.hpp"
#include "json.hpp"
#include "marking.hpp"

namespace bged {

namespace detail {

SpanBuilder::SpanBuilder(std::u32string plain, std::vector<Span> existing)
    : plain_(std::move(plain)), covered_(plain_.size(), 0), spans_(std::move(existing)) {
  for (const Span& s : spans_) {
    if (s.empty()) empty_positions_.push_back(s.start);
    std::fill(covered_.begin() + static_cast<std::ptrdiff_t>(s.start),
              covered_.begin() + static_cast<std::ptrdiff_t>(s.end), 1);
  }
  std::sort(empty_positions_.begin(), empty_positions_.end());
}

bool SpanBuilder::is_free(std::size_t start, std::size_t end) const {
  for (std::size_t i = start; i < end; ++i) {
    if (covered_[i]) return false;
  }
  auto it = std::upper_bound(empty_positions_.begin(), empty_positions_.end(), start);
  return it == empty_positions_.end() || *it >= end;
}

bool SpanBuilder::at_token_boundary(std::size_t start, std::size_t end) const {
  auto edge = [](char32_t c) { return is_space(c) || is_punct(c); };
  return (start == 0 || edge(plain_[start - 1])) &&
         (end == plain_.size() || edge(plain_[end]));
}

void SpanBuilder::add(std::size_t start, std::size_t end) {
  std::fill(covered_.begin() + static_cast<std::ptrdiff_t>(start),
            covered_.begin() + static_cast<std::ptrdiff_t>(end), 1);
  const Span span{start, end};
  auto it = std::upper_bound(spans_.begin(), spans_.end(), span, [](const Span& a, const Span& b) {
    return a.start != b.start ? a.start < b.start : a.end < b.end;
  });
  spans_.insert(it, span);
}

std::size_t SpanBuilder::wrap_whole_tokens(std::u32string_view word) {
  std::size_t added = 0;
  if (word.empty()) return added;
  const std::u32string_view text(plain_);
  std::size_t pos = 0;
  while ((pos = text.find(word, pos)) != std::u32string_view::npos) {
    const std::size_t end = pos + word.size();
    if (at_token_boundary(pos, end) && is_free(pos, end)) {
      add(pos, end);
      ++added;
      pos = end;
    } else {
      ++pos;
    }
  }
  return added;
}

std::size_t SpanBuilder::wrap_substrings(std::u32string_view pattern) {
  std::size_t added = 0;
  if (pattern.empty()) return added;
  const std::u32string_view text(plain_);
  std::size_t pos = 0;
  while ((pos = text.find(pattern, pos)) != std::u32string_view::npos) {
    const std::size_t end = pos + pattern.size();
    if (is_free(pos, end)) {
      add(pos, end);
      ++added;
      pos = end;
    } else {
      ++pos;
    }
  }
  return added;
}

std::string SpanBuilder::marked() const { return insert_markers(plain_, spans_); }

}  // namespace detail

namespace {

void sort_longest_first(std::vector<std::string>& entries, const char* what) {
  for (const std::string& e : entries) {
    if (e.empty()) throw std::invalid_argument(std::string("empty ") + what);
    if (count_markers(e) != 0) {
      throw std::invalid_argument(std::string(what) + " contains '$': " + e);
    }
  }
  std::vector<std::pair<std::size_t, std::string>> keyed;
  keyed.reserve(entries.size());
  for (std::string& e : entries) {
    const std::size_t len = utf8_length(e);
    keyed.emplace_back(len, std::move(e));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());
  entries.clear();
  for (auto& [len, e] : keyed) entries.push_back(std::move(e));
}

}  // namespace

RuleSet::RuleSet(std::vector<std::string> common_error_words,
                 std::vector<std::string> literal_rules)
    : words_(std::move(common_error_words)), literals_(std::move(literal_rules)) {
  sort_longest_first(words_, "common error word");
  sort_longest_first(literals_, "literal rule");
}

RuleSet RuleSet::merged(const RuleSet& other) const {
  std::vector<std::string> words = words_;
  words.insert(words.end(), other.words_.begin(), other.words_.end());
  std::vector<std::string> literals = literals_;
  literals.insert(literals.end(), other.literals_.begin(), other.literals_.end());
  return RuleSet(std::move(words), std::move(literals));
}

RuleSet RuleSet::normalized(const NormConfig& cfg) const {
  std::vector<std::string> words, literals;
  for (const auto& w : words_) words.push_back(normalize(w, cfg));
  for (const auto& l : literals_) literals.push_back(normalize(l, cfg));
  return RuleSet(std::move(words), std::move(literals));
}

std::string to_json(const RuleSet& rules) {
  nlohmann::json j;
  j["common_error_words"] = rules.common_error_words();
  j["literal_rules"] = rules.literal_rules();
  return j.dump(2) + "\n";
}

RuleSet rules_from_json(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("rule set JSON: ") + e.what());
  }
  auto strings = [&](const char* key) {
    std::vector<std::string> out;
    if (!j.is_object()) throw Error("rule set JSON must be an object");
    if (!j.contains(key)) return out;
    const auto& arr = j.at(key);
    if (!arr.is_array()) throw Error(std::string("rule set JSON: ") + key + " must be an array");
    for (const auto& v : arr) {
      if (!v.is_string()) throw Error(std::string("rule set JSON: ") + key + " holds a non-string");
      out.push_back(v.get<std::string>());
    }
    return out;
  };
  try {
    return RuleSet(strings("common_error_words"), strings("literal_rules"));
  } catch (const std::invalid_argument& e) {
    throw Error(std::string("rule set JSON: ") + e.what());
  }
}

RuleSet load_rules(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return rules_from_json(buf.str());
}

void save_rules(const RuleSet& rules, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << to_json(rules);
}

std::string regex_correction(std::string_view sentence, const RuleSet& rules) {
  if (count_markers(sentence) != 0) throw MarkedInput();
  detail::SpanBuilder builder(decode_utf8(sentence), {});
  for (const std::string& w : rules.common_error_words()) {
    builder.wrap_whole_tokens(decode_utf8(w));
  }
  for (const std::string& r : rules.literal_rules()) {
    builder.wrap_substrings(decode_utf8(r));
  }
  return builder.marked();
}

void MiningConfig::validate() const {
  if (min_support < 1) throw std::invalid_argument("min_support must be >= 1");
  if (!(min_precision > 0.0 && min_precision <= 1.0)) {
    throw std::invalid_argument("min_precision must be in (0, 1]");
  }
}

RuleSet mine_common_errors(std::span<const CorpusRecord> train, const MiningConfig& cfg) {
  cfg.validate();
  struct Count {
    std::size_t total = 0;
    std::size_t in_span = 0;
  };
  std::map<std::u32string, Count> counts;
  for (const CorpusRecord& rec : train) {
    if (!rec.gold) throw MissingGold(rec.id);
    const std::u32string plain = decode_utf8(rec.gold->plain());
    const auto& spans = rec.gold->spans();
    std::size_t i = 0;
    while (i < plain.size()) {
      while (i < plain.size() && is_space(plain[i])) ++i;
      std::size_t start = i;
      while (i < plain.size() && !is_space(plain[i])) ++i;
      std::size_t end = i;
      while (start < end && is_punct(plain[start])) ++start;
      while (end > start && is_punct(plain[end - 1])) --end;
      if (start == end) continue;
      Count& c = counts[plain.substr(start, end - start)];
      ++c.total;
      const bool inside = std::any_of(spans.begin(), spans.end(), [&](const Span& s) {
        return s.start <= start && end <= s.end;
      });
      if (inside) ++c.in_span;
    }
  }
  std::vector<std::string> words;
  for (const auto& [token, c] : counts) {
    if (c.in_span < cfg.min_support) continue;
    const double precision = static_cast<double>(c.in_span) / static_cast<double>(c.total);
    if (precision >= cfg.min_precision) words.push_back(encode_utf8(token));
  }
  return RuleSet(std::move(words), {});
}

std::set<std::string> load_wordlist(const std::filesystem::path& path,
                                    std::vector<std::size_t>* skipped_lines) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::set<std::string> words;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      if (skipped_lines) skipped_lines->push_back(line_no);
      continue;
    }
    const auto last = line.find_last_not_of(" \t\r");
    std::string word = line.substr(first, last - first + 1);
    if (!is_valid_utf8(word)) throw FormatError(path.string(), line_no, "invalid UTF-8");
    if (count_markers(word) != 0) throw FormatError(path.string(), line_no, "word contains '$'");
    words.insert(std::move(word));
  }
  return words;
}

}  // namespace bged
