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

#include "bged/tsv.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "bged/error.hpp"
#include "bged/utf8.hpp"

namespace bged {

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      cells.emplace_back(line.substr(start));
      return cells;
    }
    cells.emplace_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

TsvReader::TsvReader(std::istream& in, std::string source)
    : in_(in), source_(std::move(source)) {}

void TsvReader::fail(const std::string& reason) const {
  throw FormatError(source_, line_no_, reason);
}

void TsvReader::expect_header(const std::vector<std::string>& columns) {
  std::string line;
  if (!std::getline(in_, line)) {
    line_no_ = 1;
    fail("missing header");
  }
  ++line_no_;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  // Tolerate a UTF-8 byte order mark on the header.
  if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
  if (split_tabs(line) != columns) {
    std::string want;
    for (const auto& c : columns) want += (want.empty() ? "" : "<TAB>") + c;
    fail("expected header '" + want + "'");
  }
  columns_ = columns.size();
}

bool TsvReader::next(std::vector<std::string>& cells) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      if (in_.peek() == std::char_traits<char>::eof()) return false;
      fail("empty line");
    }
    try {
      utf8_length(line);
    } catch (const InvalidUtf8& e) {
      fail(e.what());
    }
    cells = split_tabs(line);
    if (cells.size() != columns_) {
      fail("expected " + std::to_string(columns_) + " columns, found " +
           std::to_string(cells.size()));
    }
    return true;
  }
  return false;
}

std::vector<std::pair<std::string, std::string>> read_pairs(
    std::istream& in, const std::string& source, const std::string& value_column) {
  TsvReader reader(in, source);
  reader.expect_header({"id", value_column});
  std::vector<std::pair<std::string, std::string>> rows;
  std::vector<std::string> cells;
  while (reader.next(cells)) {
    if (cells[0].empty()) reader.fail("empty id");
    rows.emplace_back(std::move(cells[0]), std::move(cells[1]));
  }
  return rows;
}

std::vector<std::pair<std::string, std::string>> load_pairs(
    const std::filesystem::path& path, const std::string& value_column) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_pairs(in, path.string(), value_column);
}

void check_cell(std::string_view cell, const std::string& what) {
  if (cell.find_first_of("\t\r\n") != std::string_view::npos) {
    throw std::invalid_argument(what + " contains a tab or newline");
  }
}

void write_pairs(std::ostream& out, const std::string& value_column,
                 const std::vector<std::pair<std::string, std::string>>& rows) {
  out << "id\t" << value_column << '\n';
  for (const auto& [id, value] : rows) {
    check_cell(id, "id");
    check_cell(value, value_column);
    out << id << '\t' << value << '\n';
  }
}

}  // namespace bged
