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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bged/corpus.hpp"
#include "bged/error.hpp"
#include "bged/eval.hpp"
#include "bged/lookup.hpp"
#include "bged/pipeline.hpp"
#include "bged/reconcile.hpp"
#include "bged/rules.hpp"
#include "bged/simgen.hpp"
#include "bged/textnorm.hpp"

namespace py = pybind11;
using namespace bged;

namespace {

using RecordTuple = std::tuple<std::string, std::string, std::optional<std::string>>;

std::vector<CorpusRecord> to_records(const std::vector<RecordTuple>& rows) {
  std::vector<CorpusRecord> out;
  out.reserve(rows.size());
  for (const auto& [id, input, gold] : rows) {
    CorpusRecord r{id, input, std::nullopt};
    if (gold) r.gold = parse_marked(*gold);
    out.push_back(std::move(r));
  }
  return out;
}

NormConfig norm_of(bool strip_inner_newlines, bool unicode_nfc, bool collapse_spaces) {
  return NormConfig{strip_inner_newlines, unicode_nfc, collapse_spaces};
}

py::dict counters_dict(const StageCounters& c) {
  py::dict d;
  d["lookup_hits"] = c.lookup_hits;
  d["char_level"] = c.char_level;
  d["word_level"] = c.word_level;
  d["regex_fallback"] = c.regex_fallback;
  d["raw_passthrough"] = c.raw_passthrough;
  d["input_passthrough"] = c.input_passthrough;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Post-processing and Levenshtein scoring for $-marked error detection";

  py::register_exception<Error>(m, "BgedError", PyExc_ValueError);

  py::class_<Span>(m, "Span")
      .def(py::init<std::size_t, std::size_t>(), py::arg("start"), py::arg("end"))
      .def_readonly("start", &Span::start)
      .def_readonly("end", &Span::end)
      .def("__eq__", [](const Span& a, const Span& b) { return a == b; })
      .def("__repr__", [](const Span& s) {
        return "Span(" + std::to_string(s.start) + ", " + std::to_string(s.end) + ")";
      });

  py::class_<MarkedSentence>(m, "MarkedSentence")
      .def_static("parse", &MarkedSentence::parse, py::arg("line"))
      .def_property_readonly("plain", &MarkedSentence::plain)
      .def_property_readonly("spans", &MarkedSentence::spans)
      .def_property_readonly("raw", &MarkedSentence::raw)
      .def("has_errors", &MarkedSentence::has_errors)
      .def("serialize", &MarkedSentence::serialize);

  m.def("parse_marked", &parse_marked, py::arg("line"));
  m.def("strip_markers", &strip_markers, py::arg("marked"));
  m.def("count_markers", &count_markers, py::arg("text"));

  m.def(
      "normalize",
      [](const std::string& text, bool strip_inner_newlines, bool unicode_nfc,
         bool collapse_spaces) {
        return normalize(text, norm_of(strip_inner_newlines, unicode_nfc, collapse_spaces));
      },
      py::arg("text"), py::arg("strip_inner_newlines") = true, py::arg("unicode_nfc") = true,
      py::arg("collapse_spaces") = false);

  py::class_<CharLookupTable>(m, "CharLookupTable")
      .def(py::init<>())
      .def_static("builtin", []() { return CharLookupTable::builtin(); })
      .def_static("load", [](const std::string& path) { return CharLookupTable::load(path); })
      .def("add",
           [](CharLookupTable& t, const std::u32string& wrong, const std::u32string& right) {
             if (wrong.size() != 1 || right.size() != 1) {
               throw py::value_error("entries are single characters");
             }
             t.add(wrong[0], right[0]);
           })
      .def("__len__", &CharLookupTable::size)
      .def("entries", [](const CharLookupTable& t) {
        std::map<std::u32string, std::u32string> out;
        for (auto [k, v] : t.entries()) out[std::u32string(1, k)] = std::u32string(1, v);
        return out;
      });

  py::class_<Mismatch>(m, "Mismatch")
      .def_readonly("input_pos", &Mismatch::input_pos)
      .def_readonly("output_pos", &Mismatch::output_pos)
      .def("__repr__", [](const Mismatch& x) {
        return "Mismatch(" + std::to_string(x.input_pos) + ", " + std::to_string(x.output_pos) +
               ")";
      });

  py::class_<AlignmentFailed>(m, "AlignmentFailed")
      .def_readonly("output_tokens", &AlignmentFailed::output_tokens)
      .def_readonly("input_tokens", &AlignmentFailed::input_tokens)
      .def_readonly("reason", &AlignmentFailed::reason);

  // str on success, Mismatch otherwise.
  m.def(
      "char_correct",
      [](const std::string& output, const std::string& input,
         const CharLookupTable& table) -> py::object {
        auto r = char_correct(output, input, table);
        if (auto* ok = std::get_if<CharCorrection>(&r)) return py::str(ok->text);
        return py::cast(std::get<Mismatch>(r));
      },
      py::arg("output"), py::arg("input"), py::arg("table") = CharLookupTable());

  m.def(
      "word_correct",
      [](const std::string& output, const std::string& input) -> py::object {
        auto r = word_correct(output, input);
        if (auto* ok = std::get_if<std::string>(&r)) return py::str(*ok);
        return py::cast(std::get<AlignmentFailed>(r));
      },
      py::arg("output"), py::arg("input"));

  py::class_<RuleSet>(m, "RuleSet")
      .def(py::init<>())
      .def(py::init<std::vector<std::string>, std::vector<std::string>>(),
           py::arg("common_error_words"), py::arg("literal_rules") = std::vector<std::string>{})
      .def_property_readonly("common_error_words", &RuleSet::common_error_words)
      .def_property_readonly("literal_rules", &RuleSet::literal_rules)
      .def("to_json", [](const RuleSet& r) { return to_json(r); })
      .def_static("from_json", [](const std::string& s) { return rules_from_json(s); })
      .def("__eq__", [](const RuleSet& a, const RuleSet& b) { return a == b; });

  m.def("regex_correction", &regex_correction, py::arg("sentence"), py::arg("rules"));
  m.def("apply_p2", &apply_p2, py::arg("predicted"), py::arg("rules"));

  m.def(
      "reconcile",
      [](const std::string& output, const std::string& input, const CharLookupTable& table,
         const RuleSet& rules) {
        const ReconcileOutcome o = reconcile(output, input, table, rules);
        return py::make_tuple(o.result, std::string(to_string(o.stage)), o.replacements);
      },
      py::arg("output"), py::arg("input"), py::arg("table") = CharLookupTable::builtin(),
      py::arg("rules") = RuleSet());

  m.def(
      "mine_common_errors",
      [](const std::vector<RecordTuple>& records, std::size_t min_support, double min_precision) {
        return mine_common_errors(to_records(records), MiningConfig{min_support, min_precision});
      },
      py::arg("records"), py::arg("min_support") = 3, py::arg("min_precision") = 0.95);

  m.def(
      "build_lookup",
      [](const std::vector<RecordTuple>& records) {
        return build_lookup(to_records(records), NormConfig{}).entries();
      },
      py::arg("records"));

  m.def(
      "levenshtein",
      [](const std::string& a, const std::string& b) {
        return levenshtein(std::string_view(a), std::string_view(b));
      },
      py::arg("a"), py::arg("b"));

  m.def("variants", []() {
    std::vector<std::string> out;
    for (AblationVariant v : kAllVariants) out.emplace_back(variant_id(v));
    return out;
  });

  // records: [(id, input, gold or None)]; raw_outputs: {id: text}. Returns
  // (predictions {id: (predicted, stage)}, counters).
  m.def(
      "run_pipeline",
      [](const std::vector<RecordTuple>& records,
         const std::unordered_map<std::string, std::string>& raw_outputs,
         const std::string& variant, const RuleSet& rules,
         const std::vector<RecordTuple>& lookup_records, const CharLookupTable& table) {
        Resources res;
        res.char_table = table;
        res.rules = rules;
        res.lookup = build_lookup(to_records(lookup_records), NormConfig{});
        const PipelineRun run =
            run_pipeline(to_records(records), raw_outputs, res, parse_variant(variant),
                         NormConfig{});
        py::dict preds;
        for (const auto& p : run.predictions) {
          preds[py::str(p.id)] = py::make_tuple(p.predicted, std::string(to_string(p.stage)));
        }
        return py::make_tuple(preds, counters_dict(run.counters));
      },
      py::arg("records"), py::arg("raw_outputs"), py::arg("variant"),
      py::arg("rules") = RuleSet(), py::arg("lookup_records") = std::vector<RecordTuple>{},
      py::arg("table") = CharLookupTable::builtin());

  m.def(
      "split_report",
      [](const std::unordered_map<std::string, std::string>& predictions, const GoldMap& golds,
         const std::unordered_map<std::string, std::string>& split, const std::string& variant) {
        std::vector<PredictionRecord> preds;
        for (const auto& [id, text] : predictions) {
          PredictionRecord p;
          p.id = id;
          p.predicted = text;
          preds.push_back(std::move(p));
        }
        SplitAssignment parts;
        for (const auto& [id, name] : split) parts[id] = parse_split_part(name);
        const EvalReport r = split_report(preds, golds, parts, {}, parse_variant(variant));
        py::dict d;
        d["private"] = r.private_avg;
        d["public"] = r.public_avg;
        d["aggregated"] = r.aggregated;
        d["n"] = r.n;
        return d;
      },
      py::arg("predictions"), py::arg("golds"), py::arg("split"), py::arg("variant") = "CC");

  m.def(
      "degrade",
      [](const std::string& gold, double char_swap_rate,
         const std::map<std::string, std::string>& word_swap_pairs,
         std::optional<std::size_t> truncate_at_tokens, double marker_drop_rate,
         std::uint64_t seed, const CharLookupTable& table) {
        DegradeConfig cfg;
        cfg.char_swap_rate = char_swap_rate;
        cfg.word_swap_pairs = word_swap_pairs;
        cfg.truncate_at_tokens = truncate_at_tokens;
        cfg.marker_drop_rate = marker_drop_rate;
        cfg.seed = seed;
        return degrade(parse_marked(gold), cfg, table);
      },
      py::arg("gold"), py::arg("char_swap_rate") = 0.0,
      py::arg("word_swap_pairs") = std::map<std::string, std::string>{},
      py::arg("truncate_at_tokens") = std::optional<std::size_t>(256),
      py::arg("marker_drop_rate") = 0.0, py::arg("seed") = 0,
      py::arg("table") = CharLookupTable::builtin());

  m.def(
      "synth_corpus",
      [](std::size_t sentences, std::uint64_t seed) {
        SynthConfig cfg;
        cfg.sentences = sentences;
        cfg.seed = seed;
        std::vector<RecordTuple> out;
        for (const auto& r : synth_corpus(cfg)) out.emplace_back(r.id, r.input, r.gold->raw());
        return out;
      },
      py::arg("sentences"), py::arg("seed") = 1);
}
