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

#include "bged/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "bged/error.hpp"
#include "bged/tsv.hpp"
#include "bged/utf8.hpp"
#include "json.hpp"

namespace bged {

namespace {

// Match bit vectors of the pattern, one 64-bit word per block.
class PatternMatch {
 public:
  explicit PatternMatch(std::u32string_view pattern)
      : words_((pattern.size() + 63) / 64) {
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      const char32_t c = pattern[i];
      std::uint64_t* bits;
      if (c < 128) {
        if (ascii_.empty()) ascii_.assign(128 * words_, 0);
        bits = &ascii_[c * words_];
      } else {
        auto& v = other_[c];
        if (v.empty()) v.assign(words_, 0);
        bits = v.data();
      }
      bits[i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }

  std::uint64_t get(char32_t c, std::size_t word) const {
    if (c < 128) return ascii_.empty() ? 0 : ascii_[c * words_ + word];
    auto it = other_.find(c);
    return it == other_.end() ? 0 : it->second[word];
  }

  std::size_t words() const { return words_; }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> ascii_;
  std::unordered_map<char32_t, std::vector<std::uint64_t>> other_;
};

// Hyyrö's blocked form of Myers' algorithm. pattern must be non-empty.
std::size_t myers_blocked(std::u32string_view pattern, std::u32string_view text) {
  const PatternMatch pm(pattern);
  const std::size_t words = pm.words();
  const std::uint64_t last = std::uint64_t{1} << ((pattern.size() - 1) % 64);
  std::vector<std::uint64_t> vp(words, ~std::uint64_t{0});
  std::vector<std::uint64_t> vn(words, 0);
  std::size_t score = pattern.size();

  for (char32_t c : text) {
    std::uint64_t hp_carry = 1;
    std::uint64_t hn_carry = 0;
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint64_t x = pm.get(c, w) | hn_carry;
      const std::uint64_t d0 = (((x & vp[w]) + vp[w]) ^ vp[w]) | x | vn[w];
      std::uint64_t hp = vn[w] | ~(d0 | vp[w]);
      std::uint64_t hn = d0 & vp[w];
      const std::uint64_t hp_in = hp_carry;
      const std::uint64_t hn_in = hn_carry;
      if (w + 1 < words) {
        hp_carry = hp >> 63;
        hn_carry = hn >> 63;
      } else {
        hp_carry = (hp & last) != 0;
        hn_carry = (hn & last) != 0;
      }
      hp = (hp << 1) | hp_in;
      hn = (hn << 1) | hn_in;
      vp[w] = hn | ~(d0 | hp);
      vn[w] = hp & d0;
    }
    score = score + hp_carry - hn_carry;
  }
  return score;
}

}  // namespace

std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  // Common prefix and suffix never change the distance.
  while (!a.empty() && !b.empty() && a.front() == b.front()) {
    a.remove_prefix(1);
    b.remove_prefix(1);
  }
  while (!a.empty() && !b.empty() && a.back() == b.back()) {
    a.remove_suffix(1);
    b.remove_suffix(1);
  }
  if (a.empty()) return b.size();
  if (b.empty()) return a.size();
  if (a.size() > b.size()) std::swap(a, b);
  return myers_blocked(a, b);
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
  return levenshtein(std::u32string_view(decode_utf8(a)), std::u32string_view(decode_utf8(b)));
}

double average_distance(std::span<const PredictionRecord> preds, const GoldMap& golds) {
  if (preds.empty()) return 0.0;
  std::size_t sum = 0;
  for (const PredictionRecord& p : preds) {
    auto it = golds.find(p.id);
    if (it == golds.end()) throw MissingGold(p.id);
    sum += levenshtein(std::string_view(p.predicted), std::string_view(it->second));
  }
  return static_cast<double>(sum) / static_cast<double>(preds.size());
}

std::string_view to_string(SplitPart part) {
  return part == SplitPart::kPrivate ? "Private" : "Public";
}

SplitPart parse_split_part(std::string_view name) {
  if (name == "Private") return SplitPart::kPrivate;
  if (name == "Public") return SplitPart::kPublic;
  throw std::invalid_argument("split must be Private or Public, got '" + std::string(name) + "'");
}

SplitAssignment even_split(std::vector<std::string> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  SplitAssignment split;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    split[ids[i]] = i % 2 == 0 ? SplitPart::kPrivate : SplitPart::kPublic;
  }
  return split;
}

SplitAssignment load_split(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  TsvReader reader(in, path.string());
  reader.expect_header({"id", "split"});
  SplitAssignment split;
  std::vector<std::string> cells;
  while (reader.next(cells)) {
    SplitPart part;
    try {
      part = parse_split_part(cells[1]);
    } catch (const std::invalid_argument& e) {
      reader.fail(e.what());
    }
    if (!split.emplace(cells[0], part).second) reader.fail("duplicate id '" + cells[0] + "'");
  }
  return split;
}

void save_split(const SplitAssignment& split, const std::filesystem::path& path) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& [id, part] : split) rows.emplace_back(id, std::string(to_string(part)));
  std::sort(rows.begin(), rows.end());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  write_pairs(out, "split", rows);
}

EvalReport split_report(std::span<const PredictionRecord> preds, const GoldMap& golds,
                        const SplitAssignment& split, const StageCounters& counters,
                        AblationVariant variant) {
  std::vector<PredictionRecord> priv, pub;
  for (const PredictionRecord& p : preds) {
    auto it = split.find(p.id);
    if (it == split.end()) throw UnassignedId(p.id);
    (it->second == SplitPart::kPrivate ? priv : pub).push_back(p);
  }
  if (priv.empty()) throw EmptySplit("Private");
  if (pub.empty()) throw EmptySplit("Public");
  EvalReport report;
  report.variant = variant;
  report.private_avg = average_distance(priv, golds);
  report.public_avg = average_distance(pub, golds);
  report.aggregated = (report.private_avg + report.public_avg) / 2.0;
  report.counters = counters;
  report.n = preds.size();
  report.private_n = priv.size();
  report.public_n = pub.size();
  return report;
}

double round_report(double value) {
  const double scale = std::pow(10.0, kReportDecimals);
  return std::round(value * scale) / scale;
}

std::string format_score(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", kReportDecimals, round_report(value));
  return buf;
}

namespace {

std::string regex_cell(const EvalReport& r) {
  return r.counters_known && uses_rules(r.variant) ? std::to_string(r.counters.regex_fallback) : "-";
}

std::string match_cell(const EvalReport& r) {
  return r.counters_known && uses_lookup(r.variant) ? std::to_string(r.counters.lookup_hits) : "-";
}

}  // namespace

std::string format_report_table(std::span<const EvalReport> reports) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"Model", "Regex", "Match", "Private", "Public", "Aggregated"});
  for (const EvalReport& r : reports) {
    rows.push_back({std::string(variant_label(r.variant)), regex_cell(r), match_cell(r),
                    format_score(r.private_avg), format_score(r.public_avg),
                    format_score(r.aggregated)});
  }
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::size_t pad = width[c] - row[c].size();
      if (c == 0) {
        out += row[c] + std::string(pad, ' ');
      } else {
        out += "  " + std::string(pad, ' ') + row[c];
      }
    }
    out += '\n';
  }
  return out;
}

std::string to_json(std::span<const EvalReport> reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const EvalReport& r : reports) {
    const StageCounters& c = r.counters;
    nlohmann::json counters = nullptr;
    if (r.counters_known) {
      counters = {{"lookup_hits", c.lookup_hits},
                  {"char_level", c.char_level},
                  {"word_level", c.word_level},
                  {"regex_fallback", c.regex_fallback},
                  {"raw_passthrough", c.raw_passthrough},
                  {"input_passthrough", c.input_passthrough}};
    }
    arr.push_back({
        {"variant", std::string(variant_id(r.variant))},
        {"model", std::string(variant_label(r.variant))},
        {"private", round_report(r.private_avg)},
        {"public", round_report(r.public_avg)},
        {"aggregated", round_report(r.aggregated)},
        {"n", r.n},
        {"private_n", r.private_n},
        {"public_n", r.public_n},
        {"counters", counters},
    });
  }
  return arr.dump(2) + "\n";
}

}  // namespace bged
