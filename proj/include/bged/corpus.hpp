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

#ifndef BGED_CORPUS_HPP_
#define BGED_CORPUS_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bged/textnorm.hpp"

namespace bged {

inline constexpr char kMarker = '$';

// Half-open interval of scalar-value indices into MarkedSentence::plain().
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  bool empty() const { return start == end; }
  std::size_t length() const { return end - start; }
  friend bool operator==(const Span&, const Span&) = default;
};

// A sentence with zero or more `$`-bracketed error spans. Spans are sorted,
// disjoint and may be empty (an omission marked as `$$`). Immutable.
class MarkedSentence {
 public:
  // Throws OddMarkerCount when the '$' count is odd, InvalidUtf8 on bad input.
  static MarkedSentence parse(std::string_view line);

  // Builds the marked form from a plain sentence and spans. Spans must be
  // sorted, non-overlapping and inside the sentence; plain must not contain
  // '$'. Throws std::invalid_argument otherwise.
  static MarkedSentence from_spans(std::string plain, std::vector<Span> spans);

  const std::string& plain() const { return plain_; }
  const std::vector<Span>& spans() const { return spans_; }
  const std::string& raw() const { return raw_; }
  bool has_errors() const { return !spans_.empty(); }

  // Re-inserts a '$' at every span boundary. Equals raw() for every parsed
  // sentence.
  std::string serialize() const;

  friend bool operator==(const MarkedSentence&, const MarkedSentence&) = default;

 private:
  MarkedSentence(std::string plain, std::vector<Span> spans, std::string raw)
      : plain_(std::move(plain)), spans_(std::move(spans)), raw_(std::move(raw)) {}

  std::string plain_;
  std::vector<Span> spans_;
  std::string raw_;
};

MarkedSentence parse_marked(std::string_view line);
std::string strip_markers(std::string_view marked);
std::size_t count_markers(std::string_view text);

// Marked text built by wrapping each span of plain in '$'.
std::string insert_markers(std::u32string_view plain, std::span<const Span> spans);

struct CorpusRecord {
  std::string id;
  std::string input;
  std::optional<MarkedSentence> gold;
};

struct CorpusStats {
  std::size_t total = 0;
  std::size_t with_error = 0;
  std::size_t num_errors = 0;

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

// Throws MissingGold if a record carries no annotation.
CorpusStats corpus_stats(std::span<const CorpusRecord> records);

enum class Schema { kTrain, kTest };

// Train files have header `id<TAB>input<TAB>gold`, test files `id<TAB>input`.
// The gold column must strip to the input (compared after normalization under
// cfg). Input cells may not contain '$'.
std::vector<CorpusRecord> load_corpus(const std::filesystem::path& path, Schema schema,
                                      const NormConfig& cfg = {});
std::vector<CorpusRecord> read_corpus(std::istream& in, Schema schema,
                                      const std::string& source,
                                      const NormConfig& cfg = {});

struct Diagnostic {
  std::size_t line_no = 0;
  std::string message;
};

// Like read_corpus but collects every problem instead of stopping at the
// first one.
std::vector<Diagnostic> validate_corpus(std::istream& in, Schema schema,
                                        const NormConfig& cfg = {});

// Writes a train file when every record has gold, otherwise a test file.
void write_corpus(std::ostream& out, std::span<const CorpusRecord> records);

}  // namespace bged

#endif  // BGED_CORPUS_HPP_
