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

#include "bged/simgen.hpp"

#include <cstdio>
#include <stdexcept>

#include "bged/utf8.hpp"

namespace bged {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

bool valid_rate(double r) { return r >= 0.0 && r <= 1.0; }

}  // namespace

void DegradeConfig::validate() const {
  if (!valid_rate(char_swap_rate)) throw std::invalid_argument("char_swap_rate must be in [0, 1]");
  if (!valid_rate(marker_drop_rate)) {
    throw std::invalid_argument("marker_drop_rate must be in [0, 1]");
  }
}

std::mt19937_64 make_rng(std::uint64_t seed, std::string_view salt) {
  return std::mt19937_64(splitmix64(seed ^ fnv1a64(salt)));
}

double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::string degrade(const MarkedSentence& gold, const DegradeConfig& cfg,
                    const CharLookupTable& table) {
  cfg.validate();
  std::mt19937_64 rng = make_rng(cfg.seed, gold.raw());

  // 1. Missed detections.
  std::vector<Span> kept;
  for (const Span& s : gold.spans()) {
    if (next_unit(rng) >= cfg.marker_drop_rate) kept.push_back(s);
  }
  std::u32string text = decode_utf8(insert_markers(decode_utf8(gold.plain()), kept));

  // 2. Respelled words, markers around them kept.
  if (!cfg.word_swap_pairs.empty()) {
    std::map<std::u32string, std::u32string> pairs;
    for (const auto& [from, to] : cfg.word_swap_pairs) pairs[decode_utf8(from)] = decode_utf8(to);
    std::u32string out;
    std::size_t i = 0;
    while (i < text.size()) {
      if (is_space(text[i])) {
        out.push_back(text[i++]);
        continue;
      }
      std::size_t begin = i;
      while (i < text.size() && !is_space(text[i])) ++i;
      std::size_t end = i;
      std::size_t core_begin = begin, core_end = end;
      while (core_begin < core_end && text[core_begin] == U'$') ++core_begin;
      while (core_end > core_begin && text[core_end - 1] == U'$') --core_end;
      const std::u32string core = text.substr(core_begin, core_end - core_begin);
      auto it = pairs.find(core);
      out.append(text, begin, core_begin - begin);
      out.append(it != pairs.end() ? it->second : core);
      out.append(text, core_end, end - core_end);
    }
    text = std::move(out);
  }

  // 3. Confusable characters the table can map back.
  if (cfg.char_swap_rate > 0.0) {
    for (char32_t& c : text) {
      if (c == U'$') continue;
      const std::vector<char32_t> sources = table.sources_for(c);
      if (sources.empty()) continue;
      if (next_unit(rng) < cfg.char_swap_rate) c = sources[rng() % sources.size()];
    }
  }

  // 4. Length limit.
  if (cfg.truncate_at_tokens) {
    std::size_t tokens = 0;
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && is_space(text[i])) ++i;
      if (i == text.size()) break;
      if (tokens == *cfg.truncate_at_tokens) {
        // Cut right after the last kept token.
        std::size_t cut = i;
        while (cut > 0 && is_space(text[cut - 1])) --cut;
        text.resize(cut);
        break;
      }
      while (i < text.size() && !is_space(text[i])) ++i;
      ++tokens;
    }
  }
  return encode_utf8(text);
}

const std::vector<std::string>& synthetic_vocabulary() {
  static const std::vector<std::string> words = {
      "আমি",   "তুমি",   "সে",     "আমরা",   "তারা",    "বই",     "ভাত",
      "খাই",   "জল",     "নদী",    "শহর",    "দেশ",     "মানুষ",  "গান",
      "শুনি",  "লিখি",   "কথা",    "সুন্দর", "নতুন",    "পুরনো",  "ছাত্র",
      "শিক্ষক", "দিন",    "রাত",    "আকাশ",   "নীল",     "ফুল",    "গাছ",
      "পাখি",  "ঘরে",    "যাই",    "আসে",    "জানি",    "ভালো",   "খুব",
      "এবং",   "কিন্তু", "উপর",    "ঈদ",     "ঊষা",     "school", "bus",
      "e-mail", "online", "\"হ্যাঁ\"",
  };
  return words;
}

const std::vector<std::string>& synthetic_error_words() {
  static const std::vector<std::string> words = {
      "করিতেছি", "যাইতেছি", "বলিলাম", "খাইলাম",
      "দেখিলাম", "শুনিলাম", "লিখিতেছি", "আসিলেন",
  };
  return words;
}

const std::map<std::string, std::string>& synthetic_respellings() {
  static const std::map<std::string, std::string> pairs = {
      {"ভালো", "ভাল"},   {"পুরনো", "পুরানো"}, {"কিন্তু", "কিন্ত"},
      {"এবং", "ও"},      {"খুব", "অনেক"},     {"school", "skool"},
      {"online", "on-line"}, {"মানুষ", "মানব"},
  };
  return pairs;
}

std::vector<CorpusRecord> synth_corpus(const SynthConfig& cfg) {
  if (cfg.min_tokens == 0 || cfg.min_tokens > cfg.max_tokens) {
    throw std::invalid_argument("token range must satisfy 0 < min_tokens <= max_tokens");
  }
  const auto& vocab = synthetic_vocabulary();
  const auto& errors = synthetic_error_words();
  std::mt19937_64 rng = make_rng(cfg.seed, "synth_corpus");

  std::vector<CorpusRecord> records;
  records.reserve(cfg.sentences);
  for (std::size_t n = 0; n < cfg.sentences; ++n) {
    const std::size_t count =
        cfg.min_tokens + static_cast<std::size_t>(rng() % (cfg.max_tokens - cfg.min_tokens + 1));
    std::vector<std::u32string> words;
    std::vector<bool> is_error;
    for (std::size_t k = 0; k < count; ++k) {
      const bool err = next_unit(rng) < cfg.error_word_rate;
      const auto& pool = err ? errors : vocab;
      words.push_back(decode_utf8(pool[rng() % pool.size()]));
      is_error.push_back(err);
    }

    std::u32string plain;
    std::vector<Span> spans;
    std::size_t open_until = 0;  // ordinary span covers words up to this index
    std::size_t open_start = 0;
    for (std::size_t k = 0; k < count; ++k) {
      if (k > 0) plain.push_back(U' ');
      const std::size_t start = plain.size();
      plain += words[k];
      const std::size_t end = plain.size();
      if (k < open_until) {
        if (k + 1 == open_until) spans.push_back({open_start, end});
      } else if (is_error[k]) {
        spans.push_back({start, end});
      } else if (next_unit(rng) < cfg.span_rate) {
        // One or two ordinary words; never swallows an error word.
        std::size_t len = 1 + rng() % 2;
        if (k + len > count || (len == 2 && is_error[k + 1])) len = 1;
        if (len == 1) {
          spans.push_back({start, end});
        } else {
          open_start = start;
          open_until = k + len;
        }
      } else if (next_unit(rng) < cfg.omission_rate) {
        spans.push_back({end, end});
      }
    }
    plain += U"।";

    CorpusRecord rec;
    char id[32];
    std::snprintf(id, sizeof id, "syn%06zu", n);
    rec.id = id;
    rec.input = encode_utf8(plain);
    rec.gold = MarkedSentence::from_spans(rec.input, std::move(spans));
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace bged
