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

#ifndef NEREVAL_METRICS_HPP_
#define NEREVAL_METRICS_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nereval/standoff.hpp"
#include "nereval/tagging.hpp"

namespace nereval {

// Raw matching counts for one class.
struct Counts {
  std::size_t tp = 0;
  std::size_t gold_n = 0;
  std::size_t pred_n = 0;

  Counts& operator+=(const Counts& o) {
    tp += o.tp;
    gold_n += o.gold_n;
    pred_n += o.pred_n;
    return *this;
  }
  bool operator==(const Counts&) const = default;
};

// Per-class counts. Forms a commutative monoid under merge_counts, so
// shard counts can be summed in any order.
using MatchCounts = std::map<std::string, Counts>;

void merge_counts(MatchCounts& into, const MatchCounts& from);

struct Scores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  bool operator==(const Scores&) const = default;
};

struct ClassScore {
  std::string label;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;  // gold occurrences

  bool operator==(const ClassScore&) const = default;
};

enum class AverageMode { Micro, Macro, Weighted };

struct EvalReport {
  std::vector<ClassScore> classes;  // sorted by label
  Scores micro;
  Scores macro;
  Scores weighted;
  // True when any reported number fell back to the zero-division
  // convention (0.0). Never serialized; aggregation stays NaN-free.
  bool undefined = false;
};

// Exact (label, start, end) matching between two non-overlapping span sets.
MatchCounts match_entities(const std::vector<EntitySpan>& gold,
                           const std::vector<EntitySpan>& pred);

// Per-token label agreement; inputs must have equal length.
MatchCounts token_counts(const std::vector<std::string>& gold_labels,
                         const std::vector<std::string>& pred_labels);

// Exact label + fragment-list matching between standoff annotation sets.
MatchCounts offset_match(const std::vector<StandoffEntity>& gold,
                         const std::vector<StandoffEntity>& pred);

// P = tp/pred_n, R = tp/gold_n, F1 = 2PR/(P+R); each 0.0 when its
// denominator is 0 (sets *undefined when that happens).
Scores prf(const Counts& c, bool* undefined = nullptr);

// Micro pools raw counts; macro is the unweighted mean over `classes`;
// weighted weights each class by its gold support.
Scores average(const std::vector<ClassScore>& classes, const MatchCounts& raw,
               AverageMode mode, bool* undefined = nullptr);

// Full report over the classes present in `counts` (a class exists when it
// occurs in gold or pred). Labels in `exclude` are dropped from the report
// and from every average.
EvalReport build_report(const MatchCounts& counts,
                        const std::set<std::string>& exclude = {});

}  // namespace nereval

#endif  // NEREVAL_METRICS_HPP_
