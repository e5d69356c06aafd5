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

#include "bged/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

#include "bged/error.hpp"
#include "bged/tsv.hpp"
#include "bged/utf8.hpp"

namespace bged {

std::size_t count_markers(std::string_view text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), kMarker));
}

std::string strip_markers(std::string_view marked) {
  std::string out;
  out.reserve(marked.size());
  for (char c : marked) {
    if (c != kMarker) out.push_back(c);
  }
  return out;
}

std::string insert_markers(std::u32string_view plain, std::span<const Span> spans) {
  std::u32string out;
  out.reserve(plain.size() + 2 * spans.size());
  std::size_t pos = 0;
  for (const Span& s : spans) {
    out.append(plain.substr(pos, s.start - pos));
    out.push_back(U'$');
    out.append(plain.substr(s.start, s.length()));
    out.push_back(U'$');
    pos = s.end;
  }
  out.append(plain.substr(pos));
  return encode_utf8(out);
}

MarkedSentence MarkedSentence::parse(std::string_view line) {
  const std::size_t markers = count_markers(line);
  if (markers % 2 != 0) throw OddMarkerCount(markers);
  const std::u32string text = decode_utf8(line);

  std::u32string plain;
  plain.reserve(text.size());
  std::vector<Span> spans;
  spans.reserve(markers / 2);
  bool open = false;
  std::size_t start = 0;
  for (char32_t c : text) {
    if (c != U'$') {
      plain.push_back(c);
    } else if (open) {
      spans.push_back({start, plain.size()});
      open = false;
    } else {
      start = plain.size();
      open = true;
    }
  }
  return MarkedSentence(encode_utf8(plain), std::move(spans), std::string(line));
}

MarkedSentence MarkedSentence::from_spans(std::string plain, std::vector<Span> spans) {
  if (count_markers(plain) != 0) {
    throw std::invalid_argument("plain sentence contains '$'");
  }
  const std::u32string text = decode_utf8(plain);
  std::size_t prev_end = 0;
  for (const Span& s : spans) {
    if (s.start > s.end || s.end > text.size()) {
      throw std::invalid_argument("span out of range");
    }
    if (s.start < prev_end) throw std::invalid_argument("spans overlap or are unsorted");
    prev_end = s.end;
  }
  std::string raw = insert_markers(text, spans);
  return MarkedSentence(std::move(plain), std::move(spans), std::move(raw));
}

std::string MarkedSentence::serialize() const {
  return insert_markers(decode_utf8(plain_), spans_);
}

MarkedSentence parse_marked(std::string_view line) { return MarkedSentence::parse(line); }

CorpusStats corpus_stats(std::span<const CorpusRecord> records) {
  CorpusStats stats;
  for (const CorpusRecord& r : records) {
    if (!r.gold) throw MissingGold(r.id);
    ++stats.total;
    if (r.gold->has_errors()) ++stats.with_error;
    stats.num_errors += r.gold->spans().size();
  }
  return stats;
}

namespace {

// Reads every data row; problems on a row are handed to on_error, which either
// rethrows or records them.
void scan_corpus(std::istream& in, Schema schema, const std::string& source,
                 const NormConfig& cfg, const std::function<void(CorpusRecord)>& on_record,
                 const std::function<void(const FormatError&)>& on_error) {
  TsvReader reader(in, source);
  if (schema == Schema::kTrain) {
    reader.expect_header({"id", "input", "gold"});
  } else {
    reader.expect_header({"id", "input"});
  }
  std::unordered_set<std::string> seen;
  std::vector<std::string> cells;
  while (true) {
    try {
      if (!reader.next(cells)) break;
      CorpusRecord rec;
      rec.id = std::move(cells[0]);
      rec.input = std::move(cells[1]);
      if (rec.id.empty()) reader.fail("empty id");
      if (!seen.insert(rec.id).second) reader.fail("duplicate id '" + rec.id + "'");
      if (count_markers(rec.input) != 0) reader.fail("input column contains '$'");
      if (schema == Schema::kTrain) {
        try {
          rec.gold = MarkedSentence::parse(cells[2]);
        } catch (const OddMarkerCount& e) {
          reader.fail(std::string("gold: ") + e.what());
        }
        if (normalize(rec.gold->plain(), cfg) != normalize(rec.input, cfg)) {
          reader.fail("gold does not match input once markers are removed");
        }
      }
      on_record(std::move(rec));
    } catch (const FormatError& e) {
      on_error(e);
    }
  }
}

}  // namespace

std::vector<CorpusRecord> read_corpus(std::istream& in, Schema schema,
                                      const std::string& source, const NormConfig& cfg) {
  std::vector<CorpusRecord> records;
  scan_corpus(
      in, schema, source, cfg, [&](CorpusRecord r) { records.push_back(std::move(r)); },
      [](const FormatError& e) { throw e; });
  return records;
}

std::vector<CorpusRecord> load_corpus(const std::filesystem::path& path, Schema schema,
                                      const NormConfig& cfg) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_corpus(in, schema, path.string(), cfg);
}

std::vector<Diagnostic> validate_corpus(std::istream& in, Schema schema,
                                        const NormConfig& cfg) {
  std::vector<Diagnostic> problems;
  try {
    scan_corpus(
        in, schema, "<corpus>", cfg, [](CorpusRecord) {},
        [&](const FormatError& e) { problems.push_back({e.line_no(), e.reason()}); });
  } catch (const FormatError& e) {
    // Header problems end the scan.
    problems.push_back({e.line_no(), e.reason()});
  }
  return problems;
}

void write_corpus(std::ostream& out, std::span<const CorpusRecord> records) {
  const bool train = std::all_of(records.begin(), records.end(),
                                 [](const CorpusRecord& r) { return r.gold.has_value(); });
  out << (train ? "id\tinput\tgold\n" : "id\tinput\n");
  for (const CorpusRecord& r : records) {
    check_cell(r.id, "id");
    check_cell(r.input, "input");
    out << r.id << '\t' << r.input;
    if (train) {
      check_cell(r.gold->raw(), "gold");
      out << '\t' << r.gold->raw();
    }
    out << '\n';
  }
}

}  // namespace bged
