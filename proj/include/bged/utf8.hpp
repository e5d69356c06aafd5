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

#ifndef BGED_UTF8_HPP_
#define BGED_UTF8_HPP_

#include <string>
#include <string_view>

namespace bged {

// All span and distance arithmetic is done on Unicode scalar values, so text
// crosses the API as UTF-8 and is decoded here.

// Throws InvalidUtf8 on malformed, overlong or surrogate sequences.
std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(std::u32string_view text);

// Number of scalar values; throws InvalidUtf8 like decode_utf8.
std::size_t utf8_length(std::string_view text);

bool is_valid_utf8(std::string_view text);

bool is_space(char32_t c);
bool is_punct(char32_t c);

}  // namespace bged

#endif  // BGED_UTF8_HPP_
