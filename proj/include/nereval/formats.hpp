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

#ifndef NEREVAL_FORMATS_HPP_
#define NEREVAL_FORMATS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "nereval/methodology.hpp"
#include "nereval/metrics.hpp"
#include "nereval/runs.hpp"
#include "nereval/standoff.hpp"
#include "nereval/tagging.hpp"

namespace nereval {

struct Sentence {
  std::vector<std::string> tokens;
  TagSequence tags;

  bool operator==(const Sentence&) const = default;
};

struct Document {
  std::string id;
  std::vector<Sentence> sequences;
};

// CoNLL-style columns: token first, tag last, blank line between sequences,
// '#' comment lines recognized only between sequences.
std::vector<Sentence> parse_conll(std::string_view text);

// Inverse of parse_conll: "token TAG" lines, blank separators, trailing
// newline after the last token line.
std::string write_conll(const std::vector<Sentence>& sentences);

// BRAT standoff .ann: T-lines become entities (";"-separated fragment
// lists supported); every other line kind is skipped.
std::vector<StandoffEntity> parse_brat_ann(std::string_view text);

// {"runs":[{"seed":int,"metrics":{name:number,...}},...]}
std::vector<RunScores> parse_runs_json(std::string_view text);

enum class ReportFormat { Json, Markdown, Csv };
ReportFormat parse_report_format(std::string_view name);

// All emitters are deterministic; identical inputs give identical bytes.
// Markdown and CSV print scores as percentages with 2 decimals; JSON keeps
// full-precision fractions.
std::string emit_report(const EvalReport& report, ReportFormat format);
std::string emit_comparison(const ComparisonTable& table, ReportFormat format);
// Aggregated run values are printed verbatim (no rescaling): run files
// may already contain percentages.
std::string emit_aggregates(const std::vector<AggregateScore>& aggregates,
                            ReportFormat format);

// "73.03 ± 1.29" (two decimals on both sides).
std::string format_mean_std(double mean, double std_dev);
// Two-decimal fixed formatting of the value as given.
std::string format_number(double value);
// Fraction in [0,1] shown as a percentage with 2 decimals: 0.5 -> "50.00".
std::string format_score(double fraction);

}  // namespace nereval

#endif  // NEREVAL_FORMATS_HPP_
