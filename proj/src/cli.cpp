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

#include "bged/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "CLI11.hpp"
#include "bged/corpus.hpp"
#include "bged/error.hpp"
#include "bged/eval.hpp"
#include "bged/lookup.hpp"
#include "bged/pipeline.hpp"
#include "bged/reconcile.hpp"
#include "bged/rules.hpp"
#include "bged/simgen.hpp"
#include "bged/tsv.hpp"

namespace bged::cli {

namespace {

struct Options {
  std::vector<std::string> in;
  std::string raw;
  std::string gold;
  std::string rules;
  std::string char_table;
  std::string lookup;
  std::string variant = "CC_WC_R_L_P2";
  std::string split;
  std::string out;
  std::string config;
  std::string schema = "train";
  std::uint64_t seed = 0;

  std::vector<std::string> wordlists;
  std::size_t min_support = MiningConfig{}.min_support;
  double min_precision = MiningConfig{}.min_precision;

  double swap_rate = 0.05;
  double drop_rate = 0.0;
  std::size_t truncate = 256;
  std::string word_pairs;
  std::size_t synth = 0;

  bool no_nfc = false;
  bool keep_newlines = false;
  bool collapse_spaces = false;

  NormConfig norm;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Settles flags and the optional JSON config; the config wins.
void resolve(Options& o) {
  o.norm.unicode_nfc = !o.no_nfc;
  o.norm.strip_inner_newlines = !o.keep_newlines;
  o.norm.collapse_spaces = o.collapse_spaces;
  if (o.config.empty()) return;
  const PipelineConfig cfg = pipeline_config_from_json(read_file(o.config));
  if (cfg.variant) o.variant = std::string(variant_id(*cfg.variant));
  if (cfg.norm) o.norm = *cfg.norm;
  if (cfg.char_table_path) o.char_table = *cfg.char_table_path;
  if (cfg.ruleset_path) o.rules = *cfg.ruleset_path;
  if (cfg.lookup_path) o.lookup = *cfg.lookup_path;
  if (cfg.raw_outputs_path) o.raw = *cfg.raw_outputs_path;
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw CLI::RequiredError(flag);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  return out;
}

Schema parse_schema(const std::string& name) {
  if (name == "train") return Schema::kTrain;
  if (name == "test") return Schema::kTest;
  throw CLI::ValidationError("--schema", "must be train or test");
}

// Picks the schema from the header line.
std::vector<CorpusRecord> load_any_corpus(const std::string& path, const NormConfig& cfg) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::string header;
  std::getline(in, header);
  const Schema schema =
      header.find("\tgold") != std::string::npos ? Schema::kTrain : Schema::kTest;
  return load_corpus(path, schema, cfg);
}

std::unordered_map<std::string, std::string> load_raw_outputs(const std::string& path) {
  std::unordered_map<std::string, std::string> raw;
  for (auto& [id, text] : load_pairs(path, "raw_output")) {
    if (!raw.emplace(id, std::move(text)).second) throw DuplicateId(id);
  }
  return raw;
}

Resources load_resources(const Options& o) {
  Resources res;
  res.char_table = o.char_table.empty() ? CharLookupTable::builtin()
                                        : CharLookupTable::load(o.char_table);
  if (!o.rules.empty()) res.rules = load_rules(o.rules).normalized(o.norm);
  if (!o.lookup.empty()) res.lookup = load_lookup(o.lookup);
  return res;
}

GoldMap gold_map(const std::vector<CorpusRecord>& records, const NormConfig& cfg) {
  GoldMap golds;
  for (const CorpusRecord& r : records) {
    if (!r.gold) throw MissingGold(r.id);
    golds[r.id] = normalize(r.gold->raw(), cfg);
  }
  return golds;
}

SplitAssignment split_for(const Options& o, const std::vector<std::string>& ids) {
  if (!o.split.empty()) return load_split(o.split);
  return even_split(ids);
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  require(o.in.empty() ? "" : o.in.front(), "--in");
  const Schema schema = parse_schema(o.schema);
  int status = 0;
  for (const std::string& path : o.in) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    const auto problems = validate_corpus(in, schema, o.norm);
    for (const Diagnostic& d : problems) {
      err << path << ":" << d.line_no << ": " << d.message << "\n";
    }
    if (problems.empty()) {
      out << path << ": ok\n";
    } else {
      out << path << ": " << problems.size() << " problem(s)\n";
      status = 1;
    }
  }
  return status;
}

int cmd_stats(const Options& o, std::ostream& out) {
  require(o.in.empty() ? "" : o.in.front(), "--in");
  std::vector<std::pair<std::string, CorpusStats>> rows;
  for (const std::string& path : o.in) {
    const auto records = load_corpus(path, Schema::kTrain, o.norm);
    rows.emplace_back(std::filesystem::path(path).stem().string(), corpus_stats(records));
  }
  std::size_t width = 5;
  for (const auto& [name, s] : rows) width = std::max(width, name.size());
  out << std::left << std::setw(static_cast<int>(width)) << "Split" << std::right
      << std::setw(8) << "Total" << std::setw(12) << "With Error" << std::setw(13)
      << "Num. Errors" << "\n";
  for (const auto& [name, s] : rows) {
    out << std::left << std::setw(static_cast<int>(width)) << name << std::right
        << std::setw(8) << s.total << std::setw(12) << s.with_error << std::setw(13)
        << s.num_errors << "\n";
  }
  return 0;
}

int cmd_mine_rules(const Options& o, std::ostream& out, std::ostream& err) {
  require(o.out, "--out");
  std::vector<CorpusRecord> train;
  for (const std::string& path : o.in) {
    auto records = load_corpus(path, Schema::kTrain, o.norm);
    train.insert(train.end(), std::make_move_iterator(records.begin()),
                 std::make_move_iterator(records.end()));
  }
  RuleSet rules = mine_common_errors(train, MiningConfig{o.min_support, o.min_precision});
  const std::size_t mined = rules.common_error_words().size();
  for (const std::string& path : o.wordlists) {
    std::vector<std::size_t> skipped;
    const auto words = load_wordlist(path, &skipped);
    for (std::size_t line : skipped) err << path << ":" << line << ": empty line skipped\n";
    rules = rules.merged(RuleSet({words.begin(), words.end()}, {}));
  }
  if (!o.rules.empty()) rules = rules.merged(load_rules(o.rules));
  rules = rules.normalized(o.norm);
  save_rules(rules, o.out);
  out << "mined " << mined << " word(s); rule set has "
      << rules.common_error_words().size() << " word(s) and " << rules.literal_rules().size()
      << " literal rule(s)\n";
  return 0;
}

int cmd_build_lookup(const Options& o, std::ostream& out, std::ostream& err) {
  require(o.in.empty() ? "" : o.in.front(), "--in");
  require(o.out, "--out");
  std::vector<CorpusRecord> train;
  for (const std::string& path : o.in) {
    auto records = load_corpus(path, Schema::kTrain, o.norm);
    train.insert(train.end(), std::make_move_iterator(records.begin()),
                 std::make_move_iterator(records.end()));
  }
  const SentenceLookup table = build_lookup(train, o.norm);
  for (const std::string& key : table.conflicts()) {
    err << "warning: conflicting gold for duplicate sentence: " << key << "\n";
  }
  for (const std::string& id : table.skipped()) {
    err << "warning: record " << id << " skipped (normalization moved a marker)\n";
  }
  save_lookup(table, o.out);
  out << table.size() << " entries, " << table.conflicts().size() << " conflict(s)\n";
  return 0;
}

PipelineRun run_variant(const std::vector<CorpusRecord>& records,
                        const std::unordered_map<std::string, std::string>& raw,
                        const Resources& res, AblationVariant variant, const NormConfig& cfg) {
  return run_pipeline(records, raw, res, variant, cfg);
}

void print_counters(std::ostream& os, const StageCounters& c) {
  os << "lookup_hits=" << c.lookup_hits << " char_level=" << c.char_level
     << " word_level=" << c.word_level << " regex_fallback=" << c.regex_fallback
     << " raw_passthrough=" << c.raw_passthrough
     << " input_passthrough=" << c.input_passthrough << "\n";
}

int cmd_reconcile(const Options& o, std::ostream& out, std::ostream& err) {
  require(o.in.empty() ? "" : o.in.front(), "--in");
  require(o.out, "--out");
  const AblationVariant variant = parse_variant(o.variant);
  if (needs_raw_output(variant)) require(o.raw, "--raw");
  const auto records = load_any_corpus(o.in.front(), o.norm);
  const auto raw = o.raw.empty() ? std::unordered_map<std::string, std::string>{}
                                 : load_raw_outputs(o.raw);
  const Resources res = load_resources(o);
  const PipelineRun run = run_variant(records, raw, res, variant, o.norm);

  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& p : run.predictions) rows.emplace_back(p.id, p.predicted);
  std::sort(rows.begin(), rows.end());
  auto file = open_out(o.out);
  write_pairs(file, "predicted", rows);
  err << variant_label(variant) << ": ";
  print_counters(err, run.counters);
  out << rows.size() << " prediction(s) written to " << o.out << "\n";
  return 0;
}

int cmd_evaluate(const Options& o, std::ostream& out) {
  require(o.in.empty() ? "" : o.in.front(), "--in");
  require(o.gold, "--gold");
  const auto gold_records = load_corpus(o.gold, Schema::kTrain, o.norm);
  const GoldMap golds = gold_map(gold_records, o.norm);
  std::vector<PredictionRecord> preds;
  std::vector<std::string> ids;
  std::unordered_map<std::string, bool> seen;
  for (auto& [id, predicted] : load_pairs(o.in.front(), "predicted")) {
    if (!seen.emplace(id, true).second) throw DuplicateId(id);
    PredictionRecord p;
    p.id = id;
    p.predicted = std::move(predicted);
    ids.push_back(id);
    preds.push_back(std::move(p));
  }
  const SplitAssignment split = split_for(o, ids);
  EvalReport report = split_report(preds, golds, split, {}, parse_variant(o.variant));
  report.counters_known = false;
  const std::vector<EvalReport> reports{report};
  out << format_report_table(reports);
  if (!o.out.empty()) {
    auto file = open_out(o.out);
    file << to_json(reports);
  }
  return 0;
}

int cmd_ablate(const Options& o, std::ostream& out, std::ostream& err) {
  require(o.in.empty() ? "" : o.in.front(), "--in");
  require(o.raw, "--raw");
  const auto records = load_corpus(o.in.front(), Schema::kTrain, o.norm);
  const auto raw = load_raw_outputs(o.raw);
  const Resources res = load_resources(o);
  const GoldMap golds = gold_map(records, o.norm);
  std::vector<std::string> ids;
  for (const auto& r : records) ids.push_back(r.id);
  const SplitAssignment split = split_for(o, ids);

  std::vector<EvalReport> reports;
  for (AblationVariant v : kAllVariants) {
    const PipelineRun run = run_variant(records, raw, res, v, o.norm);
    reports.push_back(split_report(run.predictions, golds, split, run.counters, v));
    err << variant_label(v) << ": ";
    print_counters(err, run.counters);
  }
  out << format_report_table(reports);
  if (!o.out.empty()) {
    auto file = open_out(o.out);
    file << to_json(reports);
  }
  return 0;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  require(o.out, "--out");
  if (o.synth > 0) {
    SynthConfig sc;
    sc.sentences = o.synth;
    sc.seed = o.seed;
    const auto records = synth_corpus(sc);
    auto file = open_out(o.out);
    write_corpus(file, records);
    out << records.size() << " synthetic record(s) written to " << o.out << "\n";
    return 0;
  }
  require(o.in.empty() ? "" : o.in.front(), "--in");
  const auto records = load_corpus(o.in.front(), Schema::kTrain, o.norm);
  DegradeConfig dc;
  dc.char_swap_rate = o.swap_rate;
  dc.marker_drop_rate = o.drop_rate;
  dc.seed = o.seed;
  if (o.truncate == 0) {
    dc.truncate_at_tokens.reset();
  } else {
    dc.truncate_at_tokens = o.truncate;
  }
  if (!o.word_pairs.empty()) {
    for (auto& [from, to] : load_pairs(o.word_pairs, "replacement")) dc.word_swap_pairs[from] = to;
  }
  const CharLookupTable table =
      o.char_table.empty() ? CharLookupTable::builtin() : CharLookupTable::load(o.char_table);
  std::vector<std::pair<std::string, std::string>> rows;
  for (const CorpusRecord& r : records) rows.emplace_back(r.id, degrade(*r.gold, dc, table));
  std::sort(rows.begin(), rows.end());
  auto file = open_out(o.out);
  write_pairs(file, "raw_output", rows);
  out << rows.size() << " raw output(s) written to " << o.out << "\n";
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Post-processing and scoring for $-marked grammatical error detection", "bged"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--config", o.config, "JSON run config; its values override flags");
    cmd->add_flag("--no-nfc", o.no_nfc, "Skip Unicode NFC normalization");
    cmd->add_flag("--keep-newlines", o.keep_newlines, "Do not replace newlines with spaces");
    cmd->add_flag("--collapse-spaces", o.collapse_spaces, "Collapse runs of spaces");
  };

  auto* validate = app.add_subcommand("validate", "Check corpus well-formedness");
  validate->add_option("--in", o.in, "Corpus TSV")->required();
  validate->add_option("--schema", o.schema, "train or test");
  common(validate);

  auto* stats = app.add_subcommand("stats", "Print Total / With Error / Num. Errors");
  stats->add_option("--in", o.in, "Train corpus TSV (repeatable)")->required();
  common(stats);

  auto* mine = app.add_subcommand("mine-rules", "Mine common error words into a rule set");
  mine->add_option("--in", o.in, "Train corpus TSV (repeatable)");
  mine->add_option("--wordlist", o.wordlists, "Word list to merge (repeatable)");
  mine->add_option("--rules", o.rules, "Existing rule set JSON to merge");
  mine->add_option("--min-support", o.min_support, "Minimum in-span occurrences");
  mine->add_option("--min-precision", o.min_precision, "Minimum in-span fraction");
  mine->add_option("--out", o.out, "Rule set JSON")->required();
  common(mine);

  auto* build = app.add_subcommand("build-lookup", "Build the exact-match sentence table");
  build->add_option("--in", o.in, "Train corpus TSV (repeatable)")->required();
  build->add_option("--out", o.out, "Lookup TSV")->required();
  common(build);

  auto resource_flags = [&](CLI::App* cmd) {
    cmd->add_option("--raw", o.raw, "Raw model outputs TSV (id, raw_output)");
    cmd->add_option("--char-table", o.char_table, "Character lookup TSV (default: built-in)");
    cmd->add_option("--rules", o.rules, "Rule set JSON");
    cmd->add_option("--lookup", o.lookup, "Sentence lookup TSV");
    cmd->add_option("--split", o.split, "Split TSV (id, Private|Public)");
  };

  auto* rec = app.add_subcommand("reconcile", "Post-process raw outputs into predictions");
  rec->add_option("--in", o.in, "Corpus TSV (train or test schema)")->required();
  rec->add_option("--variant", o.variant, "Ablation variant");
  rec->add_option("--out", o.out, "Predictions TSV")->required();
  resource_flags(rec);
  common(rec);

  auto* eval = app.add_subcommand("evaluate", "Score predictions by Levenshtein distance");
  eval->add_option("--in", o.in, "Predictions TSV")->required();
  eval->add_option("--gold", o.gold, "Train-schema corpus with gold")->required();
  eval->add_option("--split", o.split, "Split TSV (default: alternate over sorted ids)");
  eval->add_option("--variant", o.variant, "Label for the report row");
  eval->add_option("--out", o.out, "Report JSON");
  common(eval);

  auto* ablate = app.add_subcommand("ablate", "Run and score every ablation variant");
  ablate->add_option("--in", o.in, "Train-schema corpus")->required();
  ablate->add_option("--out", o.out, "Report JSON");
  resource_flags(ablate);
  common(ablate);

  auto* sim = app.add_subcommand("simulate", "Degrade gold into synthetic raw outputs");
  sim->add_option("--in", o.in, "Train-schema corpus");
  sim->add_option("--out", o.out, "Raw outputs TSV, or corpus TSV with --synth")->required();
  sim->add_option("--seed", o.seed, "Generator seed");
  sim->add_option("--char-table", o.char_table, "Character lookup TSV (default: built-in)");
  sim->add_option("--swap-rate", o.swap_rate, "Character swap probability");
  sim->add_option("--drop-rate", o.drop_rate, "Marker pair drop probability");
  sim->add_option("--truncate", o.truncate, "Keep at most this many tokens (0: no limit)");
  sim->add_option("--word-pairs", o.word_pairs, "Respelling TSV (id=word, replacement)");
  sim->add_option("--synth", o.synth, "Write N synthetic gold records instead");
  common(sim);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    resolve(o);
    if (*validate) return cmd_validate(o, out, err);
    if (*stats) return cmd_stats(o, out);
    if (*mine) return cmd_mine_rules(o, out, err);
    if (*build) return cmd_build_lookup(o, out, err);
    if (*rec) return cmd_reconcile(o, out, err);
    if (*eval) return cmd_evaluate(o, out);
    if (*ablate) return cmd_ablate(o, out, err);
    if (*sim) return cmd_simulate(o, out);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace bged::cli
