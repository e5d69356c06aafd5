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

#ifndef BGED_SIMGEN_HPP_
#define BGED_SIMGEN_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bged/corpus.hpp"
#include "bged/reconcile.hpp"

namespace bged {

// Synthetic stand-in for the seq2seq model: degrades a gold marked sentence
// the way model output goes wrong.
struct DegradeConfig {
  // Probability that a character with a confusable in the lookup table is
  // replaced by it.
  double char_swap_rate = 0.0;
  // Whole-token respellings, applied to every matching token.
  std::map<std::string, std::string> word_swap_pairs;
  // Output keeps at most this many whitespace tokens.
  std::optional<std::size_t> truncate_at_tokens = 256;
  // Probability that a marker pair is left out.
  double marker_drop_rate = 0.0;
  std::uint64_t seed = 0;

  // Throws std::invalid_argument for rates outside [0, 1].
  void validate() const;
};

// The generator is std::mt19937_64, seeded with
// splitmix64(seed ^ fnv1a64(gold.raw())) so that each sentence is degraded
// independently of its neighbours. Uniform reals take the top 53 bits;
// choices among k options use next() % k.
std::mt19937_64 make_rng(std::uint64_t seed, std::string_view salt);
double next_unit(std::mt19937_64& rng);

// Steps, in order: drop marker pairs, respell tokens, swap characters to a
// table key that maps back to them, truncate. Deterministic in (gold, cfg,
// table).
std::string degrade(const MarkedSentence& gold, const DegradeConfig& cfg,
                    const CharLookupTable& table);

// Random gold corpus over a small fixed Bangla/Latin vocabulary. Words from
// synthetic_error_words() are always marked on their own; other spans cover
// one or two ordinary words; omissions are empty spans at a word end. Every
// sentence ends with a danda.
struct SynthConfig {
  std::size_t sentences = 1000;
  std::uint64_t seed = 1;
  std::size_t min_tokens = 4;
  std::size_t max_tokens = 14;
  double error_word_rate = 0.08;
  double span_rate = 0.12;
  double omission_rate = 0.04;
};

std::vector<CorpusRecord> synth_corpus(const SynthConfig& cfg);

const std::vector<std::string>& synthetic_vocabulary();
const std::vector<std::string>& synthetic_error_words();
// Respellings and near-synonyms for vocabulary words; none is recoverable
// through the built-in character table.
const std::map<std::string, std::string>& synthetic_respellings();

}  // namespace bged

#endif  // BGED_SIMGEN_HPP_
