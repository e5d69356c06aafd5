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

#ifndef BGED_SRC_MARKING_HPP_
#define BGED_SRC_MARKING_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "bged/corpus.hpp"

namespace bged::detail {

// Adds spans to a sentence without ever nesting or overlapping them. A new
// span may not cover a character inside an existing span, nor strictly
// contain the position of an existing empty span.
class SpanBuilder {
 public:
  SpanBuilder(std::u32string plain, std::vector<Span> existing);

  // Returns the number of spans added.
  std::size_t wrap_whole_tokens(std::u32string_view word);
  std::size_t wrap_substrings(std::u32string_view pattern);

  const std::vector<Span>& spans() const { return spans_; }
  std::string marked() const;

 private:
  bool is_free(std::size_t start, std::size_t end) const;
  bool at_token_boundary(std::size_t start, std::size_t end) const;
  void add(std::size_t start, std::size_t end);

  std::u32string plain_;
  std::vector<char> covered_;
  std::vector<std::size_t> empty_positions_;
  std::vector<Span> spans_;
};

}  // namespace bged::detail

#endif  // BGED_SRC_MARKING_HPP_
