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

#include "bged/lookup.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "bged/error.hpp"
#include "bged/tsv.hpp"

namespace bged {

bool SentenceLookup::insert(const std::string& key, const std::string& value) {
  if (strip_markers(value) != key) {
    throw std::invalid_argument("lookup value does not strip to its key");
  }
  auto [it, inserted] = entries_.emplace(key, value);
  if (!inserted && it->second != value) {
    conflicts_.push_back(key);
    return false;
  }
  return true;
}

const std::string* SentenceLookup::get(const std::string& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

SentenceLookup build_lookup(std::span<const CorpusRecord> train, const NormConfig& cfg) {
  SentenceLookup table;
  for (const CorpusRecord& rec : train) {
    if (!rec.gold) throw MissingGold(rec.id);
    std::string key = normalize(rec.input, cfg);
    std::string value = normalize(rec.gold->raw(), cfg);
    if (strip_markers(value) != key) {
      table.skipped_.push_back(rec.id);
      continue;
    }
    table.insert(key, value);
  }
  return table;
}

std::optional<std::string> find(std::string_view sentence, const SentenceLookup& table,
                                const NormConfig& cfg) {
  if (const std::string* hit = table.get(normalize(sentence, cfg))) return *hit;
  return std::nullopt;
}

void write_lookup(std::ostream& out, const SentenceLookup& table) {
  out << "plain\tmarked\n";
  for (const auto& [key, value] : table.entries()) {
    check_cell(key, "plain");
    check_cell(value, "marked");
    out << key << '\t' << value << '\n';
  }
}

SentenceLookup read_lookup(std::istream& in, const std::string& source) {
  TsvReader reader(in, source);
  reader.expect_header({"plain", "marked"});
  SentenceLookup table;
  std::vector<std::string> cells;
  while (reader.next(cells)) {
    if (count_markers(cells[1]) % 2 != 0) reader.fail("odd number of '$' in marked column");
    try {
      table.insert(cells[0], cells[1]);
    } catch (const std::invalid_argument& e) {
      reader.fail(e.what());
    }
  }
  return table;
}

void save_lookup(const SentenceLookup& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  write_lookup(out, table);
}

SentenceLookup load_lookup(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_lookup(in, path.string());
}

}  // namespace bged
