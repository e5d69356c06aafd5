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

#include "bged/pipeline.hpp"

#include <stdexcept>
#include <unordered_set>

#include "bged/error.hpp"
#include "bged/utf8.hpp"
#include "json.hpp"
#include "marking.hpp"

namespace bged {

std::string_view variant_label(AblationVariant v) {
  switch (v) {
    case AblationVariant::kRaw: return "Raw";
    case AblationVariant::kNoCorrection: return "No Corr.";
    case AblationVariant::kRegexOnly: return "R";
    case AblationVariant::kCC: return "CC";
    case AblationVariant::kCC_R: return "CC+R";
    case AblationVariant::kCC_WC_R: return "CC+WC+R";
    case AblationVariant::kCC_WC_R_L: return "CC+WC+R+L";
    case AblationVariant::kCC_WC_R_L_P2: return "CC+WC+R+L+P2";
  }
  return "?";
}

std::string_view variant_id(AblationVariant v) {
  switch (v) {
    case AblationVariant::kRaw: return "Raw";
    case AblationVariant::kNoCorrection: return "NoCorrection";
    case AblationVariant::kRegexOnly: return "RegexOnly";
    case AblationVariant::kCC: return "CC";
    case AblationVariant::kCC_R: return "CC_R";
    case AblationVariant::kCC_WC_R: return "CC_WC_R";
    case AblationVariant::kCC_WC_R_L: return "CC_WC_R_L";
    case AblationVariant::kCC_WC_R_L_P2: return "CC_WC_R_L_P2";
  }
  return "?";
}

AblationVariant parse_variant(std::string_view name) {
  for (AblationVariant v : kAllVariants) {
    if (name == variant_label(v) || name == variant_id(v)) return v;
  }
  throw std::invalid_argument("unknown variant '" + std::string(name) + "'");
}

bool uses_rules(AblationVariant v) {
  return v == AblationVariant::kRegexOnly || v == AblationVariant::kCC_R ||
         v == AblationVariant::kCC_WC_R || uses_lookup(v);
}

bool uses_lookup(AblationVariant v) {
  return v == AblationVariant::kCC_WC_R_L || v == AblationVariant::kCC_WC_R_L_P2;
}

bool needs_raw_output(AblationVariant v) { return v != AblationVariant::kRegexOnly; }

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::kLookup: return "Lookup";
    case Stage::kCharLevel: return "CharLevel";
    case Stage::kWordLevel: return "WordLevel";
    case Stage::kRegexFallback: return "RegexFallback";
    case Stage::kRawPassthrough: return "RawPassthrough";
    case Stage::kInputPassthrough: return "InputPassthrough";
  }
  return "?";
}

void StageCounters::record(Stage stage) {
  switch (stage) {
    case Stage::kLookup: ++lookup_hits; break;
    case Stage::kCharLevel: ++char_level; break;
    case Stage::kWordLevel: ++word_level; break;
    case Stage::kRegexFallback: ++regex_fallback; break;
    case Stage::kRawPassthrough: ++raw_passthrough; break;
    case Stage::kInputPassthrough: ++input_passthrough; break;
  }
}

std::size_t StageCounters::total() const {
  return lookup_hits + char_level + word_level + regex_fallback + raw_passthrough +
         input_passthrough;
}

StageCounters& StageCounters::operator+=(const StageCounters& other) {
  lookup_hits += other.lookup_hits;
  char_level += other.char_level;
  word_level += other.word_level;
  regex_fallback += other.regex_fallback;
  raw_passthrough += other.raw_passthrough;
  input_passthrough += other.input_passthrough;
  return *this;
}

std::string apply_p2(std::string_view predicted, const RuleSet& rules) {
  const MarkedSentence marked = MarkedSentence::parse(predicted);
  detail::SpanBuilder builder(decode_utf8(marked.plain()), marked.spans());
  std::size_t added = 0;
  for (const std::string& w : rules.common_error_words()) {
    added += builder.wrap_whole_tokens(decode_utf8(w));
  }
  if (added == 0) return std::string(predicted);
  return builder.marked();
}

namespace {

// Drops the last '$' when the count is odd.
std::string repair_parity(std::string text) {
  if (count_markers(text) % 2 != 0) text.erase(text.rfind(kMarker), 1);
  return text;
}

}  // namespace

PredictionRecord process_sentence(const CorpusRecord& rec,
                                  std::optional<std::string_view> raw_output,
                                  const Resources& tables, AblationVariant variant,
                                  const NormConfig& cfg) {
  PredictionRecord p;
  p.id = rec.id;
  p.input = normalize(rec.input, cfg);
  if (raw_output) p.raw_output = std::string(*raw_output);
  if (needs_raw_output(variant) && !raw_output) throw MissingRawOutput(rec.id);

  auto finish = [&](std::string predicted, Stage stage) {
    p.predicted = std::move(predicted);
    p.stage = stage;
    return p;
  };

  switch (variant) {
    case AblationVariant::kRaw:
      return finish(*p.raw_output, Stage::kRawPassthrough);
    case AblationVariant::kNoCorrection: {
      std::string candidate = repair_parity(normalize(*raw_output, cfg));
      if (strip_markers(candidate) == p.input) {
        return finish(std::move(candidate), Stage::kRawPassthrough);
      }
      return finish(p.input, Stage::kInputPassthrough);
    }
    case AblationVariant::kRegexOnly:
      return finish(regex_correction(p.input, tables.rules), Stage::kRegexFallback);
    case AblationVariant::kCC:
    case AblationVariant::kCC_R: {
      auto result = char_correct(normalize(*raw_output, cfg), p.input, tables.char_table);
      if (auto* ok = std::get_if<CharCorrection>(&result)) {
        return finish(std::move(ok->text), Stage::kCharLevel);
      }
      if (variant == AblationVariant::kCC) return finish(p.input, Stage::kInputPassthrough);
      return finish(regex_correction(p.input, tables.rules), Stage::kRegexFallback);
    }
    case AblationVariant::kCC_WC_R:
    case AblationVariant::kCC_WC_R_L:
    case AblationVariant::kCC_WC_R_L_P2: {
      if (uses_lookup(variant)) {
        // The stored gold is final; P2 does not touch it.
        if (const std::string* hit = tables.lookup.get(p.input)) {
          return finish(*hit, Stage::kLookup);
        }
      }
      ReconcileOutcome outcome = reconcile(normalize(*raw_output, cfg), p.input,
                                           tables.char_table, tables.rules);
      Stage stage = Stage::kCharLevel;
      if (outcome.stage == ReconcileStage::kWordLevel) stage = Stage::kWordLevel;
      if (outcome.stage == ReconcileStage::kRegexFallback) stage = Stage::kRegexFallback;
      if (variant == AblationVariant::kCC_WC_R_L_P2) {
        std::string swept = apply_p2(outcome.result, tables.rules);
        p.p2_added = count_markers(swept) - count_markers(outcome.result);
        outcome.result = std::move(swept);
      }
      return finish(std::move(outcome.result), stage);
    }
  }
  throw std::logic_error("unhandled variant");
}

PipelineRun run_pipeline(std::span<const CorpusRecord> records,
                         const std::unordered_map<std::string, std::string>& raw_outputs,
                         const Resources& tables, AblationVariant variant,
                         const NormConfig& cfg) {
  std::unordered_set<std::string> seen;
  for (const CorpusRecord& rec : records) {
    if (!seen.insert(rec.id).second) throw DuplicateId(rec.id);
  }
  PipelineRun run;
  run.predictions.reserve(records.size());
  for (const CorpusRecord& rec : records) {
    std::optional<std::string_view> raw;
    if (auto it = raw_outputs.find(rec.id); it != raw_outputs.end()) raw = it->second;
    run.predictions.push_back(process_sentence(rec, raw, tables, variant, cfg));
    run.counters.record(run.predictions.back().stage);
  }
  return run;
}

PipelineConfig pipeline_config_from_json(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("pipeline config: ") + e.what());
  }
  if (!j.is_object()) throw Error("pipeline config must be a JSON object");
  PipelineConfig cfg;
  try {
    if (j.contains("variant")) cfg.variant = parse_variant(j.at("variant").get<std::string>());
    if (j.contains("norm")) {
      const auto& n = j.at("norm");
      NormConfig norm;
      norm.strip_inner_newlines = n.value("strip_inner_newlines", norm.strip_inner_newlines);
      norm.unicode_nfc = n.value("unicode_nfc", norm.unicode_nfc);
      norm.collapse_spaces = n.value("collapse_spaces", norm.collapse_spaces);
      cfg.norm = norm;
    }
    auto path = [&](const char* key, std::optional<std::string>& slot) {
      if (j.contains(key) && !j.at(key).is_null()) slot = j.at(key).get<std::string>();
    };
    path("char_table_path", cfg.char_table_path);
    path("ruleset_path", cfg.ruleset_path);
    path("lookup_path", cfg.lookup_path);
    path("raw_outputs_path", cfg.raw_outputs_path);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("pipeline config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(std::string("pipeline config: ") + e.what());
  }
  return cfg;
}

std::string to_json(const PipelineConfig& cfg) {
  nlohmann::json j;
  if (cfg.variant) j["variant"] = std::string(variant_id(*cfg.variant));
  if (cfg.norm) {
    j["norm"] = {{"strip_inner_newlines", cfg.norm->strip_inner_newlines},
                 {"unicode_nfc", cfg.norm->unicode_nfc},
                 {"collapse_spaces", cfg.norm->collapse_spaces}};
  }
  auto put = [&](const char* key, const std::optional<std::string>& v) {
    if (v) j[key] = *v;
  };
  put("char_table_path", cfg.char_table_path);
  put("ruleset_path", cfg.ruleset_path);
  put("lookup_path", cfg.lookup_path);
  put("raw_outputs_path", cfg.raw_outputs_path);
  return j.dump(2) + "\n";
}

}  // namespace bged
