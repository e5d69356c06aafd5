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

#ifndef BGED_TEXTNORM_HPP_
#define BGED_TEXTNORM_HPP_

#include <string>
#include <string_view>

namespace bged {

// One NormConfig is fixed per run and applied to inputs, gold and model
// outputs alike before anything is compared.
struct NormConfig {
  // Every newline (LF, CR, CRLF, NEL, LS, PS) becomes a single space.
  bool strip_inner_newlines = true;
  // Unicode canonical composition (NFC).
  bool unicode_nfc = true;
  // Runs of U+0020 become one space. Off by default: extra spaces can be the
  // very error a span marks.
  bool collapse_spaces = false;

  friend bool operator==(const NormConfig&, const NormConfig&) = default;
};

// Idempotent; preserves the number of '$' characters. With every flag off it
// is the identity. Precondition: valid UTF-8.
std::string normalize(std::string_view text, const NormConfig& cfg);

}  // namespace bged

#endif  // BGED_TEXTNORM_HPP_
