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
// The same (gold, pred) corpus scored four ways. The methodologies differ
// in what counts as a prediction unit: whole entities (strict span match),
// every token including O, only entity-initial tokens with O excluded, or
// character-offset annotations. The divergence between their headline
// numbers on identical inputs is the point, not an accident.

#ifndef NEREVAL_METHODOLOGY_HPP_
#define NEREVAL_METHODOLOGY_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nereval/metrics.hpp"
#include "nereval/runs.hpp"
#include "nereval/standoff.hpp"
#include "nereval/tagging.hpp"

namespace nereval {

enum class MethodologyId { EntityStrict, TokenWithO, EntityWithoutO, OffsetExact };

MethodologyId parse_methodology(std::string_view name);
std::string_view to_string(MethodologyId id);

// How token-level classes are named: full tags (B-X and I-X distinct) or
// collapsed to the bare entity label.
enum class TokenClasses { Raw, Collapsed };
TokenClasses parse_token_classes(std::string_view name);

// Whether the O class takes part in token-with-O averages.
enum class OPolicy { IncludeO, ExcludeOFromAverages };
OPolicy parse_o_policy(std::string_view name);

struct EvalOptions {
  Scheme scheme = Scheme::IOB2;
  DecodeMode decode = DecodeMode::Strict;
  NestedStrategy nested = NestedStrategy::KeepCoarsest;
  TokenClasses token_classes = TokenClasses::Raw;
  OPolicy o_policy = OPolicy::IncludeO;  // token-with-O only
};

using TagCorpus = std::vector<TagSequence>;

struct MethodologyResult {
  MethodologyId methodology = MethodologyId::EntityStrict;
  EvalReport report;
  std::string headline_metric;
  double headline = 0.0;
  // Table-facing named scores, fractions in [0,1], in presentation order.
  std::vector<std::pair<std::string, double>> metrics;
  std::vector<std::string> warnings;
};

// Throws AlignmentError naming the first offending sequence index.
void check_alignment(const TagCorpus& gold, const TagCorpus& pred);

MethodologyResult eval_entity_strict(const TagCorpus& gold, const TagCorpus& pred,
                                     const EvalOptions& options = {});
MethodologyResult eval_token_with_O(const TagCorpus& gold, const TagCorpus& pred,
                                    const EvalOptions& options = {});
MethodologyResult eval_entity_without_O(const TagCorpus& gold, const TagCorpus& pred,
                                        const EvalOptions& options = {});
MethodologyResult eval_offset_exact(const std::vector<StandoffDocument>& gold,
                                    const std::vector<StandoffDocument>& pred,
                                    const EvalOptions& options = {});

// Dispatch over tag corpora; OffsetExact needs standoff input and is
// rejected here with a configuration error.
MethodologyResult evaluate(MethodologyId id, const TagCorpus& gold,
                           const TagCorpus& pred, const EvalOptions& options = {});

// Nested-annotation handling for standoff entities, using each entity's
// fragment envelope for overlap tests.
std::vector<StandoffEntity> flatten_standoff(std::vector<StandoffEntity> entities,
                                             NestedStrategy strategy);

struct AggregateScore {
  std::string metric;
  double mean = 0.0;
  double std_dev = 0.0;  // sample (n-1); exactly 0.0 when n == 1 or all equal
  std::size_t n = 0;

  bool operator==(const AggregateScore&) const = default;
};

struct ComparisonTable {
  std::vector<std::string> columns;
  struct Row {
    std::string methodology;
    std::string model;                  // optional row tag, may be empty
    std::vector<AggregateScore> cells;  // parallel to columns; n == 0 means absent
  };
  std::vector<Row> rows;
};

ComparisonTable compare_methodologies(const TagCorpus& gold, const TagCorpus& pred,
                                      const std::vector<MethodologyId>& methodologies,
                                      const EvalOptions& options = {},
                                      const std::string& model_name = "");

// Per-metric mean and sample standard deviation over seeded runs; a metric
// missing from some runs is averaged over the runs that have it.
std::vector<AggregateScore> aggregate_runs(const std::vector<RunScores>& runs);

}  // namespace nereval

#endif  // NEREVAL_METHODOLOGY_HPP_
