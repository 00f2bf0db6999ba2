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
// A second, deliberately naive implementation of strict entity scoring.
// Spans come from exhaustive enumeration of every (start, end, label)
// candidate instead of a decoder state machine; matching is plain set
// intersection; the averages are recomputed from scratch. Nothing here
// calls into the library's metric code, so agreement between the two is
// meaningful.

#ifndef NEREVAL_TESTS_ORACLE_HPP_
#define NEREVAL_TESTS_ORACLE_HPP_

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "nereval/tagging.hpp"

namespace oracle {

using Span = std::tuple<std::string, std::size_t, std::size_t>;  // label, start, end

// Every maximal chunk opened by B-label and continued by I-label, found by
// trying all O(n^2 * labels) candidates.
inline std::set<Span> enumerate_iob2_strict(const nereval::TagSequence& seq) {
  const std::size_t n = seq.size();
  std::set<std::string> labels;
  for (const nereval::Tag& t : seq) {
    if (!t.is_outside() && t.prefix != '?' && !t.label.empty()) labels.insert(t.label);
  }
  std::set<Span> spans;
  for (const std::string& label : labels) {
    const nereval::Tag b = nereval::Tag::of('B', label);
    const nereval::Tag i_tag = nereval::Tag::of('I', label);
    for (std::size_t start = 0; start < n; ++start) {
      if (!(seq[start] == b)) continue;
      for (std::size_t end = start; end < n; ++end) {
        bool body_ok = true;
        for (std::size_t k = start + 1; k <= end; ++k) {
          if (!(seq[k] == i_tag)) {
            body_ok = false;
            break;
          }
        }
        if (!body_ok) break;
        const bool maximal = end + 1 >= n || !(seq[end + 1] == i_tag);
        if (maximal) spans.insert(Span{label, start, end});
      }
    }
  }
  return spans;
}

struct ClassTally {
  std::size_t tp = 0;
  std::size_t gold_n = 0;
  std::size_t pred_n = 0;
};

struct Triple {
  double p = 0.0;
  double r = 0.0;
  double f = 0.0;
};

struct StrictScores {
  std::map<std::string, ClassTally> per_class;
  std::map<std::string, Triple> class_scores;
  Triple micro;
  Triple macro;
  Triple weighted;
};

inline Triple triple_of(std::size_t tp, std::size_t gold_n, std::size_t pred_n) {
  Triple t;
  t.p = pred_n == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(pred_n);
  t.r = gold_n == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(gold_n);
  t.f = (t.p + t.r) == 0.0 ? 0.0 : 2.0 * t.p * t.r / (t.p + t.r);
  return t;
}

// Strict entity scoring of aligned corpora, end to end.
inline StrictScores score_entity_strict(const std::vector<nereval::TagSequence>& gold,
                                        const std::vector<nereval::TagSequence>& pred) {
  StrictScores s;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const std::set<Span> g = enumerate_iob2_strict(gold[i]);
    const std::set<Span> p = enumerate_iob2_strict(pred[i]);
    std::set<Span> both;
    std::set_intersection(g.begin(), g.end(), p.begin(), p.end(),
                          std::inserter(both, both.begin()));
    for (const Span& sp : g) s.per_class[std::get<0>(sp)].gold_n += 1;
    for (const Span& sp : p) s.per_class[std::get<0>(sp)].pred_n += 1;
    for (const Span& sp : both) s.per_class[std::get<0>(sp)].tp += 1;
  }

  ClassTally pooled;
  double sum_p = 0.0, sum_r = 0.0, sum_f = 0.0;
  double w_p = 0.0, w_r = 0.0, w_f = 0.0;
  std::size_t total_support = 0;
  for (const auto& [label, tally] : s.per_class) {
    const Triple t = triple_of(tally.tp, tally.gold_n, tally.pred_n);
    s.class_scores[label] = t;
    pooled.tp += tally.tp;
    pooled.gold_n += tally.gold_n;
    pooled.pred_n += tally.pred_n;
    sum_p += t.p;
    sum_r += t.r;
    sum_f += t.f;
    w_p += t.p * static_cast<double>(tally.gold_n);
    w_r += t.r * static_cast<double>(tally.gold_n);
    w_f += t.f * static_cast<double>(tally.gold_n);
    total_support += tally.gold_n;
  }
  s.micro = triple_of(pooled.tp, pooled.gold_n, pooled.pred_n);
  if (!s.per_class.empty()) {
    const double n = static_cast<double>(s.per_class.size());
    s.macro = Triple{sum_p / n, sum_r / n, sum_f / n};
  }
  if (total_support > 0) {
    const double w = static_cast<double>(total_support);
    s.weighted = Triple{w_p / w, w_r / w, w_f / w};
  }
  return s;
}

}  // namespace oracle

#endif  // NEREVAL_TESTS_ORACLE_HPP_
