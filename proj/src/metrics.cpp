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

#include "nereval/metrics.hpp"

#include <algorithm>

#include "nereval/errors.hpp"

namespace nereval {

namespace {

void note(bool* undefined) {
  if (undefined) *undefined = true;
}

}  // namespace

void merge_counts(MatchCounts& into, const MatchCounts& from) {
  for (const auto& [label, c] : from) into[label] += c;
}

MatchCounts match_entities(const std::vector<EntitySpan>& gold,
                           const std::vector<EntitySpan>& pred) {
  MatchCounts counts;
  for (const EntitySpan& e : gold) counts[e.label].gold_n += 1;
  for (const EntitySpan& e : pred) counts[e.label].pred_n += 1;

  // Exact matching: a prediction scores iff an identical gold span exists,
  // each gold span consumed at most once.
  std::map<EntitySpan, std::size_t> gold_pool;
  for (const EntitySpan& e : gold) gold_pool[e] += 1;
  for (const EntitySpan& e : pred) {
    auto it = gold_pool.find(e);
    if (it != gold_pool.end() && it->second > 0) {
      it->second -= 1;
      counts[e.label].tp += 1;
    }
  }
  return counts;
}

MatchCounts token_counts(const std::vector<std::string>& gold_labels,
                         const std::vector<std::string>& pred_labels) {
  if (gold_labels.size() != pred_labels.size()) {
    throw InvalidInputError("token label sequences differ in length: " +
                            std::to_string(gold_labels.size()) + " vs " +
                            std::to_string(pred_labels.size()));
  }
  MatchCounts counts;
  for (std::size_t i = 0; i < gold_labels.size(); ++i) {
    counts[gold_labels[i]].gold_n += 1;
    counts[pred_labels[i]].pred_n += 1;
    if (gold_labels[i] == pred_labels[i]) counts[gold_labels[i]].tp += 1;
  }
  return counts;
}

MatchCounts offset_match(const std::vector<StandoffEntity>& gold,
                         const std::vector<StandoffEntity>& pred) {
  MatchCounts counts;
  for (const StandoffEntity& e : gold) counts[e.label].gold_n += 1;
  for (const StandoffEntity& e : pred) counts[e.label].pred_n += 1;

  using Key = std::pair<std::string, std::vector<Fragment>>;
  std::map<Key, std::size_t> gold_pool;
  for (const StandoffEntity& e : gold) gold_pool[{e.label, e.fragments}] += 1;
  for (const StandoffEntity& e : pred) {
    auto it = gold_pool.find({e.label, e.fragments});
    if (it != gold_pool.end() && it->second > 0) {
      it->second -= 1;
      counts[e.label].tp += 1;
    }
  }
  return counts;
}

Scores prf(const Counts& c, bool* undefined) {
  Scores s;
  if (c.pred_n > 0) {
    s.precision = static_cast<double>(c.tp) / static_cast<double>(c.pred_n);
  } else {
    note(undefined);
  }
  if (c.gold_n > 0) {
    s.recall = static_cast<double>(c.tp) / static_cast<double>(c.gold_n);
  } else {
    note(undefined);
  }
  if (s.precision + s.recall > 0.0) {
    s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
  } else {
    note(undefined);
  }
  return s;
}

Scores average(const std::vector<ClassScore>& classes, const MatchCounts& raw,
               AverageMode mode, bool* undefined) {
  if (classes.empty()) {
    note(undefined);
    return Scores{};
  }
  switch (mode) {
    case AverageMode::Micro: {
      Counts pooled;
      for (const ClassScore& cs : classes) {
        auto it = raw.find(cs.label);
        if (it != raw.end()) pooled += it->second;
      }
      return prf(pooled, undefined);
    }
    case AverageMode::Macro: {
      Scores s;
      for (const ClassScore& cs : classes) {
        s.precision += cs.precision;
        s.recall += cs.recall;
        s.f1 += cs.f1;
      }
      const double n = static_cast<double>(classes.size());
      s.precision /= n;
      s.recall /= n;
      s.f1 /= n;
      return s;
    }
    case AverageMode::Weighted: {
      double total = 0.0;
      for (const ClassScore& cs : classes) total += static_cast<double>(cs.support);
      if (total == 0.0) {
        note(undefined);
        return Scores{};
      }
      Scores s;
      for (const ClassScore& cs : classes) {
        const double w = static_cast<double>(cs.support) / total;
        s.precision += w * cs.precision;
        s.recall += w * cs.recall;
        s.f1 += w * cs.f1;
      }
      return s;
    }
  }
  return Scores{};
}

EvalReport build_report(const MatchCounts& counts,
                        const std::set<std::string>& exclude) {
  EvalReport report;
  MatchCounts kept;
  for (const auto& [label, c] : counts) {
    if (exclude.count(label)) continue;
    if (c.gold_n == 0 && c.pred_n == 0) continue;
    kept[label] = c;
    const Scores s = prf(c, &report.undefined);
    report.classes.push_back(
        ClassScore{label, s.precision, s.recall, s.f1, c.gold_n});
  }
  report.micro = average(report.classes, kept, AverageMode::Micro, &report.undefined);
  report.macro = average(report.classes, kept, AverageMode::Macro, &report.undefined);
  report.weighted =
      average(report.classes, kept, AverageMode::Weighted, &report.undefined);
  return report;
}

}  // namespace nereval
