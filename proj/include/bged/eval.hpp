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

#ifndef BGED_EVAL_HPP_
#define BGED_EVAL_HPP_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bged/pipeline.hpp"

namespace bged {

// Edit distance over Unicode scalar values with unit-cost insertions,
// deletions and substitutions. Uses the bit-parallel (Myers/Hyyrö) row update,
// blocked for patterns longer than 64.
std::size_t levenshtein(std::u32string_view a, std::u32string_view b);
// Decodes both sides first; throws InvalidUtf8.
std::size_t levenshtein(std::string_view a, std::string_view b);

using GoldMap = std::unordered_map<std::string, std::string>;

// Mean distance between each prediction and its gold. Throws MissingGold.
// Returns 0 for an empty list.
double average_distance(std::span<const PredictionRecord> preds, const GoldMap& golds);

enum class SplitPart { kPrivate, kPublic };

using SplitAssignment = std::unordered_map<std::string, SplitPart>;

std::string_view to_string(SplitPart part);
SplitPart parse_split_part(std::string_view name);

// Sorts ids and alternates Private, Public, ... so the halves differ in size
// by at most one.
SplitAssignment even_split(std::vector<std::string> ids);
// TSV `id<TAB>split` with values Private or Public.
SplitAssignment load_split(const std::filesystem::path& path);
void save_split(const SplitAssignment& split, const std::filesystem::path& path);

struct EvalReport {
  AblationVariant variant = AblationVariant::kRaw;
  double private_avg = 0.0;
  double public_avg = 0.0;
  // Mean of the two split means, not the mean over all records.
  double aggregated = 0.0;
  StageCounters counters;
  // False when scoring a predictions file whose stage attribution is unknown.
  bool counters_known = true;
  std::size_t n = 0;
  std::size_t private_n = 0;
  std::size_t public_n = 0;
};

// Throws UnassignedId for a prediction outside the split, EmptySplit when
// either part receives no predictions, MissingGold as average_distance.
EvalReport split_report(std::span<const PredictionRecord> preds, const GoldMap& golds,
                        const SplitAssignment& split, const StageCounters& counters,
                        AblationVariant variant);

// Values are reported to four decimals.
inline constexpr int kReportDecimals = 4;
double round_report(double value);
std::string format_score(double value);

// Aligned table with columns Model, Regex, Match, Private, Public, Aggregated.
// Regex shows the rule-fallback count for variants with a rule stage and Match
// the lookup hits for variants with a lookup stage; '-' otherwise.
std::string format_report_table(std::span<const EvalReport> reports);
std::string to_json(std::span<const EvalReport> reports);

}  // namespace bged

#endif  // BGED_EVAL_HPP_
