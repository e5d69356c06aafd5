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

#ifndef BGED_TSV_HPP_
#define BGED_TSV_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bged {

// Line-oriented reader for the project's UTF-8 TSV files. Every data line
// must have exactly as many cells as the header; tabs and newlines cannot
// appear inside cells. A trailing CR is dropped. Errors are FormatError with
// 1-based line numbers (the header is line 1).
class TsvReader {
 public:
  TsvReader(std::istream& in, std::string source);

  // Reads the header and checks it against the expected column names.
  void expect_header(const std::vector<std::string>& columns);

  // Next data row, or false at end of input.
  bool next(std::vector<std::string>& cells);

  std::size_t line_no() const { return line_no_; }
  const std::string& source() const { return source_; }
  [[noreturn]] void fail(const std::string& reason) const;

 private:
  std::istream& in_;
  std::string source_;
  std::size_t line_no_ = 0;
  std::size_t columns_ = 0;
};

std::vector<std::string> split_tabs(std::string_view line);

// Two-column `id<TAB>value` files: raw outputs, predictions, splits.
std::vector<std::pair<std::string, std::string>> read_pairs(
    std::istream& in, const std::string& source, const std::string& value_column);
std::vector<std::pair<std::string, std::string>> load_pairs(
    const std::filesystem::path& path, const std::string& value_column);
void write_pairs(std::ostream& out, const std::string& value_column,
                 const std::vector<std::pair<std::string, std::string>>& rows);

// Throws std::invalid_argument if a cell would break the TSV framing.
void check_cell(std::string_view cell, const std::string& what);

}  // namespace bged

#endif  // BGED_TSV_HPP_
