// Copyright 2026 The nereval Authors.
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
//
// Command-line front end. Exit codes: 0 success, 1 internal error,
// 2 user/input error. stdout carries only the report; every diagnostic
// goes to stderr.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nereval/carbon.hpp"
#include "nereval/errors.hpp"
#include "nereval/formats.hpp"
#include "nereval/methodology.hpp"
#include "nereval/metrics.hpp"
#include "nereval/tagging.hpp"
#include "nereval/vocab.hpp"

namespace fs = std::filesystem;

namespace {

using nereval::EvalOptions;
using nereval::ReportFormat;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw nereval::InvalidInputError("cannot read file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

nereval::TagCorpus load_tag_corpus(const fs::path& path) {
  if (fs::is_directory(path)) {
    throw nereval::ConfigError("expected a CoNLL file, got a directory: " +
                               path.string());
  }
  nereval::TagCorpus corpus;
  try {
    for (nereval::Sentence& s : nereval::parse_conll(read_file(path))) {
      corpus.push_back(std::move(s.tags));
    }
  } catch (const nereval::ParseError& e) {
    throw nereval::ParseError(path.string() + ": " + e.what());
  }
  return corpus;
}

std::vector<nereval::StandoffDocument> load_standoff(const fs::path& path) {
  std::vector<nereval::StandoffDocument> docs;
  auto load_one = [](const fs::path& file) {
    nereval::StandoffDocument doc;
    doc.id = file.stem().string();
    try {
      doc.entities = nereval::parse_brat_ann(read_file(file));
    } catch (const nereval::ParseError& e) {
      throw nereval::ParseError(file.string() + ": " + e.what());
    }
    return doc;
  };
  if (fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".ann") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& f : files) docs.push_back(load_one(f));
  } else {
    docs.push_back(load_one(path));
  }
  return docs;
}

// Shared evaluation flags (evaluate and compare).
struct CommonFlags {
  std::string scheme = "IOB2";
  std::string decode = "strict";
  std::string nested = "keep-coarsest";
  std::string token_classes = "raw";
  std::string o_policy = "include-O";
  std::string format = "markdown";

  void attach(CLI::App* cmd) {
    cmd->add_option("--scheme", scheme, "Tagging scheme: IOB2, IOB1 or BILOU")
        ->capture_default_str();
    cmd->add_option("--decode", decode, "Chunk decoding: strict or repair")
        ->capture_default_str();
    cmd->add_option("--nested", nested,
                    "Nested entities: keep-coarsest, concatenate or error")
        ->capture_default_str();
    cmd->add_option("--token-classes", token_classes,
                    "Token class granularity: raw tags or collapsed labels")
        ->capture_default_str();
    cmd->add_option("--o-policy", o_policy,
                    "O class in token-with-O averages: include-O or exclude-O")
        ->capture_default_str();
    cmd->add_option("--format", format, "Output format: json, markdown or csv")
        ->capture_default_str();
  }

  EvalOptions eval_options() const {
    EvalOptions opt;
    opt.scheme = nereval::parse_scheme(scheme);
    opt.decode = nereval::parse_decode_mode(decode);
    opt.nested = nereval::parse_nested_strategy(nested);
    opt.token_classes = nereval::parse_token_classes(token_classes);
    opt.o_policy = nereval::parse_o_policy(o_policy);
    return opt;
  }

  ReportFormat report_format() const { return nereval::parse_report_format(format); }
};

void print_warnings(const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
}

int run_evaluate(const std::string& gold_path, const std::string& pred_path,
                 const std::string& methodology, const CommonFlags& flags) {
  const nereval::MethodologyId id = nereval::parse_methodology(methodology);
  const EvalOptions options = flags.eval_options();
  const ReportFormat format = flags.report_format();

  nereval::MethodologyResult result;
  if (id == nereval::MethodologyId::OffsetExact) {
    result = nereval::eval_offset_exact(load_standoff(gold_path),
                                        load_standoff(pred_path), options);
  } else {
    result = nereval::evaluate(id, load_tag_corpus(gold_path),
                               load_tag_corpus(pred_path), options);
  }
  print_warnings(result.warnings);

  std::string out = nereval::emit_report(result.report, format);
  if (format == ReportFormat::Markdown) {
    out += "\nheadline (" + result.headline_metric +
           "): " + nereval::format_score(result.headline) + "\n";
    for (const auto& [name, value] : result.metrics) {
      if (name == "micro-f1" || name == "macro-f1" || name == "weighted-f1") continue;
      out += name + ": " + nereval::format_score(value) + "\n";
    }
  }
  std::cout << out;
  return 0;
}

int run_compare(const std::string& gold_path, const std::string& pred_path,
                const std::vector<std::string>& methodology_names,
                const std::string& model_name, const CommonFlags& flags) {
  std::vector<nereval::MethodologyId> ids;
  ids.reserve(methodology_names.size());
  for (const std::string& name : methodology_names) {
    ids.push_back(nereval::parse_methodology(name));
  }
  const nereval::ComparisonTable table = nereval::compare_methodologies(
      load_tag_corpus(gold_path), load_tag_corpus(pred_path), ids,
      flags.eval_options(), model_name);
  std::cout << nereval::emit_comparison(table, flags.report_format());
  return 0;
}

int run_aggregate(const std::string& runs_path, const std::string& format_name) {
  const ReportFormat format = nereval::parse_report_format(format_name);
  const std::vector<nereval::RunScores> runs =
      nereval::parse_runs_json(read_file(runs_path));
  const std::vector<nereval::AggregateScore> aggregates =
      nereval::aggregate_runs(runs);
  for (const nereval::AggregateScore& a : aggregates) {
    if (a.n == 1) {
      std::cerr << "note: metric '" << a.metric
                << "' comes from a single run; std is 0.00 by definition\n";
    }
  }
  std::cout << nereval::emit_aggregates(aggregates, format);
  return 0;
}

struct VocabFlags {
  std::string vocab_a;
  std::string vocab_b;
  std::vector<std::string> marker_both;
  std::vector<std::string> marker_a;
  std::vector<std::string> marker_b;
  std::string words_path;
  bool fold_case = false;
  std::string format = "markdown";
};

nereval::MarkerConvention parse_markers(const std::vector<std::string>& shared,
                                        const std::vector<std::string>& own) {
  nereval::MarkerConvention conv;
  auto apply = [&conv](const std::string& spec) {
    const std::size_t colon = spec.find(':');
    if (colon == std::string::npos) {
      throw nereval::ConfigError("marker spec '" + spec +
                                 "' must be prefix:<str> or continuation:<str>");
    }
    const std::string kind = spec.substr(0, colon);
    const std::string marker = spec.substr(colon + 1);
    if (marker.empty()) {
      throw nereval::ConfigError("marker spec '" + spec + "' has an empty marker");
    }
    if (kind == "prefix") {
      conv.word_initial = marker;
    } else if (kind == "continuation") {
      conv.continuation = marker;
    } else {
      throw nereval::ConfigError("unknown marker kind '" + kind +
                                 "' (expected prefix or continuation)");
    }
  };
  for (const std::string& spec : shared) apply(spec);
  for (const std::string& spec : own) apply(spec);
  return conv;
}

nereval::Vocabulary load_vocab(const fs::path& path,
                               const nereval::MarkerConvention& conv,
                               bool fold_case, const char* side) {
  std::vector<std::string> raw = nereval::parse_vocab_file(read_file(path));
  if (fold_case) {
    for (std::string& e : raw) e = nereval::fold_case_ascii(e);
  }
  nereval::Vocabulary vocab = nereval::normalize_vocab(raw, conv);
  if (vocab.duplicates_collapsed > 0) {
    std::cerr << "note: vocabulary " << side << ": " << vocab.duplicates_collapsed
              << " duplicate entries collapsed\n";
  }
  if (vocab.marker_only_dropped > 0) {
    std::cerr << "note: vocabulary " << side << ": " << vocab.marker_only_dropped
              << " marker-only entries dropped\n";
  }
  return vocab;
}

int run_vocab(const VocabFlags& flags) {
  const ReportFormat format = nereval::parse_report_format(flags.format);
  const nereval::Vocabulary a =
      load_vocab(flags.vocab_a, parse_markers(flags.marker_both, flags.marker_a),
                 flags.fold_case, "A");
  const nereval::Vocabulary b =
      load_vocab(flags.vocab_b, parse_markers(flags.marker_both, flags.marker_b),
                 flags.fold_case, "B");
  const nereval::IntersectionStats stats = nereval::intersection_stats(a, b);

  std::vector<std::string> words;
  if (!flags.words_path.empty()) {
    words = nereval::parse_vocab_file(read_file(flags.words_path));
    if (flags.fold_case) {
      for (std::string& w : words) w = nereval::fold_case_ascii(w);
    }
  }

  if (format == ReportFormat::Json) {
    nlohmann::ordered_json doc;
    doc["intersection"] = {{"size_a", stats.size_a}, {"size_b", stats.size_b},
                           {"common", stats.common}, {"rate_a", stats.rate_a},
                           {"rate_b", stats.rate_b}, {"jaccard", stats.jaccard}};
    if (!words.empty()) {
      auto fert_json = [](const nereval::FertilityStats& f) {
        return nlohmann::ordered_json{
            {"mean", f.mean}, {"max", f.max}, {"p95", f.p95}, {"words", f.words}};
      };
      doc["fertility"] = {{"a", fert_json(nereval::fertility(words, a))},
                          {"b", fert_json(nereval::fertility(words, b))}};
      doc["diff"] = nlohmann::ordered_json::array();
      for (const nereval::DiffRow& row : nereval::segmentation_diff(words, a, b)) {
        doc["diff"].push_back({{"word", row.word},
                               {"pieces_a", row.pieces_a},
                               {"pieces_b", row.pieces_b},
                               {"count_a", row.count_a},
                               {"count_b", row.count_b}});
      }
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
  }

  // Markdown and CSV print rates as percentages, like every other score.
  auto pct = [](double fraction) { return nereval::format_score(fraction); };
  std::string out;
  const bool md = format == ReportFormat::Markdown;
  auto row = [&](const std::vector<std::string>& cells) {
    if (md) {
      out += "|";
      for (const std::string& c : cells) out += " " + c + " |";
      out += "\n";
    } else {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) out += ',';
        out += cells[i];
      }
      out += "\n";
    }
  };
  row({"statistic", "value"});
  if (md) out += "| --- | --- |\n";
  row({"entries A", std::to_string(stats.size_a)});
  row({"entries B", std::to_string(stats.size_b)});
  row({"common", std::to_string(stats.common)});
  row({"common/|A| (%)", pct(stats.rate_a)});
  row({"common/|B| (%)", pct(stats.rate_b)});
  row({"jaccard (%)", pct(stats.jaccard)});

  if (!words.empty()) {
    out += "\n";
    row({"word", "pieces A", "pieces B", "n A", "n B"});
    if (md) out += "| --- | --- | --- | --- | --- |\n";
    for (const nereval::DiffRow& d : nereval::segmentation_diff(words, a, b)) {
      row({d.word, d.pieces_a, d.pieces_b, std::to_string(d.count_a),
           std::to_string(d.count_b)});
    }
    const nereval::FertilityStats fa = nereval::fertility(words, a);
    const nereval::FertilityStats fb = nereval::fertility(words, b);
    out += "\n";
    row({"vocabulary", "fertility", "max", "p95", "words"});
    if (md) out += "| --- | --- | --- | --- | --- |\n";
    auto fmt = nereval::format_number;
    row({"A", fmt(fa.mean), std::to_string(fa.max), fmt(fa.p95),
         std::to_string(fa.words)});
    row({"B", fmt(fb.mean), std::to_string(fb.max), fmt(fb.p95),
         std::to_string(fb.words)});
  }
  std::cout << out;
  return 0;
}

struct CarbonFlags {
  double gpus = 0.0;
  double hours = 0.0;
  std::string device;
  double power = 0.0;
  double intensity = nereval::kDefaultIntensity;
  double pue = 1.0;
  std::string format = "markdown";
  bool has_power = false;
};

int run_carbon(const CarbonFlags& flags) {
  const ReportFormat format = nereval::parse_report_format(flags.format);
  nereval::TrainingRun run;
  run.gpu_count = flags.gpus;
  run.hours = flags.hours;
  run.intensity = flags.intensity;
  run.pue = flags.pue;
  if (flags.has_power) {
    run.gpu_power_kw = flags.power;
  } else if (!flags.device.empty()) {
    run.gpu_power_kw = nereval::default_power_kw(flags.device);
  } else {
    throw nereval::ConfigError("pass --device V100|A100 or an explicit --power");
  }
  const nereval::EmissionEstimate e = nereval::estimate_emissions(run);

  auto compact = [](double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return std::string(buf);
  };
  if (format == ReportFormat::Json) {
    nlohmann::ordered_json doc;
    doc["inputs"] = {{"gpus", run.gpu_count},   {"hours", run.hours},
                     {"power_kw", run.gpu_power_kw}, {"intensity", run.intensity},
                     {"pue", run.pue}};
    if (!flags.device.empty()) doc["inputs"]["device"] = flags.device;
    doc["gpu_hours"] = e.gpu_hours;
    doc["energy_kwh"] = e.energy_kwh;
    doc["co2_kg"] = e.co2_kg;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  const bool md = format == ReportFormat::Markdown;
  std::string out;
  auto row = [&](const std::string& k, const std::string& v) {
    out += md ? "| " + k + " | " + v + " |\n" : k + "," + v + "\n";
  };
  row("quantity", "value");
  if (md) out += "| --- | --- |\n";
  row("GPUs", compact(run.gpu_count));
  row("hours", compact(run.hours));
  if (!flags.device.empty()) row("device", flags.device);
  row("power (kW/GPU)", compact(run.gpu_power_kw));
  row("intensity (kg/kWh)", compact(run.intensity));
  row("PUE", compact(run.pue));
  row("GPU-hours", nereval::format_number(e.gpu_hours));
  row("energy (kWh)", nereval::format_number(e.energy_kwh));
  row("CO2 (kg)", nereval::format_number(e.co2_kg));
  std::cout << out;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequence-labeling evaluation toolkit"};
  app.require_subcommand(1);

  // evaluate
  std::string eval_gold, eval_pred;
  std::string eval_methodology = "entity-strict";
  CommonFlags eval_flags;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Score a prediction file against a gold file");
  evaluate->add_option("gold", eval_gold, "Gold CoNLL file (or .ann file/dir)")
      ->required();
  evaluate->add_option("pred", eval_pred, "Predicted CoNLL file (or .ann file/dir)")
      ->required();
  evaluate
      ->add_option("--methodology", eval_methodology,
                   "entity-strict, token-with-O, entity-without-O or offset-exact")
      ->capture_default_str();
  eval_flags.attach(evaluate);

  // compare
  std::string cmp_gold, cmp_pred, cmp_model;
  std::vector<std::string> cmp_methodologies;
  CommonFlags cmp_flags;
  CLI::App* compare = app.add_subcommand(
      "compare", "Score the same pair under several methodologies");
  compare->add_option("gold", cmp_gold, "Gold CoNLL file")->required();
  compare->add_option("pred", cmp_pred, "Predicted CoNLL file")->required();
  compare
      ->add_option("--methodologies", cmp_methodologies,
                   "Comma-separated methodology list")
      ->required()
      ->delimiter(',');
  compare->add_option("--model-name", cmp_model, "Optional row tag for the table");
  cmp_flags.attach(compare);

  // aggregate
  std::string agg_runs;
  std::string agg_format = "markdown";
  CLI::App* aggregate =
      app.add_subcommand("aggregate", "Mean ± std over seeded runs (runs JSON)");
  aggregate->add_option("runs", agg_runs, "runs JSON file")->required();
  aggregate->add_option("--format", agg_format, "Output format: json, markdown or csv")
      ->capture_default_str();

  // vocab
  VocabFlags vocab_flags;
  CLI::App* vocab = app.add_subcommand(
      "vocab", "Vocabulary overlap, segmentation diff and fertility");
  vocab->add_option("vocab_a", vocab_flags.vocab_a, "Vocabulary A, one entry per line")
      ->required();
  vocab->add_option("vocab_b", vocab_flags.vocab_b, "Vocabulary B, one entry per line")
      ->required();
  vocab->add_option("--marker", vocab_flags.marker_both,
                    "Marker for both sides, prefix:<str> or continuation:<str>");
  vocab->add_option("--marker-a", vocab_flags.marker_a, "Marker for vocabulary A");
  vocab->add_option("--marker-b", vocab_flags.marker_b, "Marker for vocabulary B");
  vocab->add_option("--words", vocab_flags.words_path,
                    "Word list for segmentation diff and fertility");
  vocab->add_flag("--fold-case", vocab_flags.fold_case,
                  "Lowercase ASCII before comparing");
  vocab->add_option("--format", vocab_flags.format, "Output format: json, markdown or csv")
      ->capture_default_str();

  // carbon
  CarbonFlags carbon_flags;
  CLI::App* carbon =
      app.add_subcommand("carbon", "Estimate training emissions from GPU-hours");
  carbon->add_option("--gpus", carbon_flags.gpus, "Number of devices")->required();
  carbon->add_option("--hours", carbon_flags.hours, "Wall-clock training hours")
      ->required();
  carbon->add_option("--device", carbon_flags.device, "Device name: V100 or A100");
  CLI::Option* power_opt =
      carbon->add_option("--power", carbon_flags.power, "Per-device power in kW");
  carbon->add_option("--intensity", carbon_flags.intensity,
                     "Grid intensity, kg CO2-eq per kWh")
      ->capture_default_str();
  carbon->add_option("--pue", carbon_flags.pue, "Datacenter power usage effectiveness")
      ->capture_default_str();
  carbon->add_option("--format", carbon_flags.format, "Output format: json, markdown or csv")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
    carbon_flags.has_power = power_opt->count() > 0;

    if (*evaluate) return run_evaluate(eval_gold, eval_pred, eval_methodology, eval_flags);
    if (*compare) return run_compare(cmp_gold, cmp_pred, cmp_methodologies, cmp_model, cmp_flags);
    if (*aggregate) return run_aggregate(agg_runs, agg_format);
    if (*vocab) return run_vocab(vocab_flags);
    if (*carbon) return run_carbon(carbon_flags);
    return 2;  // unreachable: require_subcommand(1)
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0; usage errors exit 2
  } catch (const nereval::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
