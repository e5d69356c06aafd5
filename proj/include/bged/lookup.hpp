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

#ifndef BGED_LOOKUP_HPP_
#define BGED_LOOKUP_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bged/corpus.hpp"
#include "bged/textnorm.hpp"

namespace bged {

// Exact-match table from a normalized plain sentence to its gold marked form.
// Every stored value strips to its key.
class SentenceLookup {
 public:
  // Returns false and keeps the existing entry when key is already present
  // with a different value; that is counted as a conflict. Throws
  // std::invalid_argument if value does not strip to key.
  bool insert(const std::string& key, const std::string& value);

  // Lookup by an already-normalized key.
  const std::string* get(const std::string& key) const;

  const std::map<std::string, std::string>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // Keys that were offered with conflicting gold, in the order seen.
  const std::vector<std::string>& conflicts() const { return conflicts_; }
  // Record ids skipped because normalization changed the gold text across a
  // marker boundary.
  const std::vector<std::string>& skipped() const { return skipped_; }

 private:
  friend SentenceLookup build_lookup(std::span<const CorpusRecord>, const NormConfig&);

  std::map<std::string, std::string> entries_;
  std::vector<std::string> conflicts_;
  std::vector<std::string> skipped_;
};

// First occurrence wins on duplicate inputs. Throws MissingGold.
SentenceLookup build_lookup(std::span<const CorpusRecord> train, const NormConfig& cfg);

std::optional<std::string> find(std::string_view sentence, const SentenceLookup& table,
                                const NormConfig& cfg);

// TSV with header `plain<TAB>marked`.
void write_lookup(std::ostream& out, const SentenceLookup& table);
SentenceLookup read_lookup(std::istream& in, const std::string& source);
void save_lookup(const SentenceLookup& table, const std::filesystem::path& path);
SentenceLookup load_lookup(const std::filesystem::path& path);

}  // namespace bged

#endif  // BGED_LOOKUP_HPP_
