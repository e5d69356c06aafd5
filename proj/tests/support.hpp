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

#ifndef BGED_TESTS_SUPPORT_HPP_
#define BGED_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "bged/utf8.hpp"

namespace bged::testing {

// Full-matrix Wagner-Fischer. Reference only; quadratic.
inline std::size_t reference_levenshtein(std::u32string_view a, std::u32string_view b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, sub});
    }
  }
  return d[a.size()][b.size()];
}

inline std::size_t reference_levenshtein(std::string_view a, std::string_view b) {
  return reference_levenshtein(decode_utf8(a), decode_utf8(b));
}

// Independent marker strip: drop every '$' byte.
inline std::string drop_dollars(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c != '$') out += c;
  }
  return out;
}

inline std::size_t dollars(std::string_view s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '$'));
}

// Small generator toolkit for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t size(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[size(0, items.size() - 1)];
  }

  // Scalars drawn from ASCII letters, Bangla letters and signs, a few
  // symbols and spaces. Never '$' unless allowed.
  char32_t scalar(bool allow_marker = false) {
    static const std::u32string pool =
        U"abcxyz ABZ019.,-"
        U"আইঈউঊকখগনণশষ"
        U"যজিীুূ্া। "
        U"é中\U0001F600";
    if (allow_marker && coin(0.08)) return U'$';
    return pool[size(0, pool.size() - 1)];
  }

  std::u32string u32(std::size_t max_len, bool allow_marker = false) {
    std::u32string s;
    const std::size_t n = size(0, max_len);
    for (std::size_t i = 0; i < n; ++i) s += scalar(allow_marker);
    return s;
  }

  std::string utf8(std::size_t max_len, bool allow_marker = false) {
    return encode_utf8(u32(max_len, allow_marker));
  }

  // A string with an even number of '$' placed at random, possibly adjacent.
  std::string even_marked(std::size_t max_len) {
    std::u32string s = u32(max_len);
    const std::size_t pairs = size(0, 3);
    for (std::size_t k = 0; k < 2 * pairs; ++k) s.insert(size(0, s.size()), 1, U'$');
    return encode_utf8(s);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace bged::testing

#endif  // BGED_TESTS_SUPPORT_HPP_
