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

#ifndef BGED_PIPELINE_HPP_
#define BGED_PIPELINE_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bged/corpus.hpp"
#include "bged/lookup.hpp"
#include "bged/reconcile.hpp"
#include "bged/rules.hpp"
#include "bged/textnorm.hpp"

namespace bged {

// Which post-processing stages are enabled. CC = character correction,
// WC = word correction, R = rule fallback, L = sentence lookup,
// P2 = final rule-word sweep.
enum class AblationVariant {
  kRaw,
  kNoCorrection,
  kRegexOnly,
  kCC,
  kCC_R,
  kCC_WC_R,
  kCC_WC_R_L,
  kCC_WC_R_L_P2,
};

inline constexpr std::array<AblationVariant, 8> kAllVariants = {
    AblationVariant::kRaw,     AblationVariant::kNoCorrection, AblationVariant::kRegexOnly,
    AblationVariant::kCC,      AblationVariant::kCC_R,         AblationVariant::kCC_WC_R,
    AblationVariant::kCC_WC_R_L, AblationVariant::kCC_WC_R_L_P2,
};

// Report label, e.g. "CC+WC+R".
std::string_view variant_label(AblationVariant v);
// Identifier, e.g. "CC_WC_R".
std::string_view variant_id(AblationVariant v);
// Accepts either form. Throws std::invalid_argument.
AblationVariant parse_variant(std::string_view name);
bool uses_rules(AblationVariant v);
bool uses_lookup(AblationVariant v);
bool needs_raw_output(AblationVariant v);

enum class Stage {
  kLookup,
  kCharLevel,
  kWordLevel,
  kRegexFallback,
  kRawPassthrough,
  kInputPassthrough,
};

std::string_view to_string(Stage stage);

struct PredictionRecord {
  std::string id;
  std::string input;  // normalized
  std::optional<std::string> raw_output;
  std::string predicted;
  Stage stage = Stage::kInputPassthrough;
  std::size_t p2_added = 0;  // '$' characters added by the P2 sweep
};

struct StageCounters {
  std::size_t lookup_hits = 0;
  std::size_t char_level = 0;
  std::size_t word_level = 0;
  std::size_t regex_fallback = 0;
  std::size_t raw_passthrough = 0;
  std::size_t input_passthrough = 0;

  void record(Stage stage);
  std::size_t total() const;
  StageCounters& operator+=(const StageCounters& other);
  friend bool operator==(const StageCounters&, const StageCounters&) = default;
};

// Tables shared read-only by every sentence of a run. Rules and the lookup
// are expected to be normalized with the run's NormConfig.
struct Resources {
  CharLookupTable char_table;
  RuleSet rules;
  SentenceLookup lookup;
};

// Wraps rule words left unmarked. Existing markers are kept as they are.
std::string apply_p2(std::string_view predicted, const RuleSet& rules);

// Every variant except Raw and RegexOnly needs raw_output
// (MissingRawOutput otherwise). Variants other than Raw always produce a
// marking of the normalized input: a candidate that cannot be made one falls
// back to the next enabled stage, and finally to the unmarked input.
PredictionRecord process_sentence(const CorpusRecord& rec,
                                  std::optional<std::string_view> raw_output,
                                  const Resources& tables, AblationVariant variant,
                                  const NormConfig& cfg);

struct PipelineRun {
  std::vector<PredictionRecord> predictions;  // in record order
  StageCounters counters;
};

// Throws DuplicateId and MissingRawOutput.
PipelineRun run_pipeline(std::span<const CorpusRecord> records,
                         const std::unordered_map<std::string, std::string>& raw_outputs,
                         const Resources& tables, AblationVariant variant,
                         const NormConfig& cfg);

// JSON run description: {variant, norm: {strip_inner_newlines, unicode_nfc,
// collapse_spaces}, char_table_path, ruleset_path, lookup_path,
// raw_outputs_path}. Every field is optional.
struct PipelineConfig {
  std::optional<AblationVariant> variant;
  std::optional<NormConfig> norm;
  std::optional<std::string> char_table_path;
  std::optional<std::string> ruleset_path;
  std::optional<std::string> lookup_path;
  std::optional<std::string> raw_outputs_path;
};

PipelineConfig pipeline_config_from_json(std::string_view json);
std::string to_json(const PipelineConfig& cfg);

}  // namespace bged

#endif  // BGED_PIPELINE_HPP_
