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

#include "nereval/methodology.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <set>

#include "nereval/errors.hpp"

namespace nereval {

namespace {

std::string token_class(const Tag& t, TokenClasses granularity) {
  if (granularity == TokenClasses::Raw) return t.str();
  return t.is_outside() ? std::string("O") : t.label;
}

std::vector<std::string> token_classes_of(const TagSequence& seq,
                                          TokenClasses granularity) {
  std::vector<std::string> out;
  out.reserve(seq.size());
  for (const Tag& t : seq) out.push_back(token_class(t, granularity));
  return out;
}

std::vector<EntitySpan> decode_sequence(const TagSequence& seq,
                                        const EvalOptions& options) {
  return flatten_nested(decode_entities(seq, options.scheme, options.decode),
                        options.nested);
}

double metric_of(const MethodologyResult& r, std::string_view name) {
  for (const auto& [metric, value] : r.metrics) {
    if (metric == name) return value;
  }
  return 0.0;
}

// Envelope of a standoff entity's fragments; offsets are end-exclusive.
Fragment envelope(const StandoffEntity& e) {
  if (e.fragments.empty()) return Fragment{};
  Fragment env{e.fragments.front().start, e.fragments.front().end};
  for (const Fragment& f : e.fragments) {
    env.start = std::min(env.start, f.start);
    env.end = std::max(env.end, f.end);
  }
  return env;
}

bool envelopes_overlap(const StandoffEntity& a, const StandoffEntity& b) {
  const Fragment ea = envelope(a);
  const Fragment eb = envelope(b);
  return ea.start < eb.end && eb.start < ea.end;
}

// Longest envelope first, then position, then label, then id.
bool coarser_standoff_first(const StandoffEntity& a, const StandoffEntity& b) {
  const Fragment ea = envelope(a);
  const Fragment eb = envelope(b);
  const std::size_t la = ea.end - ea.start;
  const std::size_t lb = eb.end - eb.start;
  if (la != lb) return la > lb;
  if (ea.start != eb.start) return ea.start < eb.start;
  if (a.label != b.label) return a.label < b.label;
  return a.id < b.id;
}

bool standoff_position_order(const StandoffEntity& a, const StandoffEntity& b) {
  const Fragment ea = envelope(a);
  const Fragment eb = envelope(b);
  if (ea.start != eb.start) return ea.start < eb.start;
  if (ea.end != eb.end) return ea.end < eb.end;
  if (a.label != b.label) return a.label < b.label;
  return a.id < b.id;
}

}  // namespace

MethodologyId parse_methodology(std::string_view name) {
  std::string lower(name);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "entity-strict") return MethodologyId::EntityStrict;
  if (lower == "token-with-o") return MethodologyId::TokenWithO;
  if (lower == "entity-without-o") return MethodologyId::EntityWithoutO;
  if (lower == "offset-exact") return MethodologyId::OffsetExact;
  throw ConfigError("unknown methodology: '" + std::string(name) +
                    "' (expected entity-strict, token-with-O, entity-without-O or "
                    "offset-exact)");
}

std::string_view to_string(MethodologyId id) {
  switch (id) {
    case MethodologyId::EntityStrict: return "entity-strict";
    case MethodologyId::TokenWithO: return "token-with-O";
    case MethodologyId::EntityWithoutO: return "entity-without-O";
    case MethodologyId::OffsetExact: return "offset-exact";
  }
  return "?";
}

TokenClasses parse_token_classes(std::string_view name) {
  if (name == "raw") return TokenClasses::Raw;
  if (name == "collapsed") return TokenClasses::Collapsed;
  throw ConfigError("unknown token-class granularity: '" + std::string(name) +
                    "' (expected raw or collapsed)");
}

OPolicy parse_o_policy(std::string_view name) {
  if (name == "include-O" || name == "include-o") return OPolicy::IncludeO;
  if (name == "exclude-O" || name == "exclude-o") return OPolicy::ExcludeOFromAverages;
  throw ConfigError("unknown O policy: '" + std::string(name) +
                    "' (expected include-O or exclude-O)");
}

void check_alignment(const TagCorpus& gold, const TagCorpus& pred) {
  if (gold.size() != pred.size()) {
    throw AlignmentError("sequence count mismatch: " + std::to_string(gold.size()) +
                             " gold vs " + std::to_string(pred.size()) + " predicted",
                         std::min(gold.size(), pred.size()));
  }
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i].size() != pred[i].size()) {
      throw AlignmentError("sequence " + std::to_string(i) +
                               ": token count mismatch: " +
                               std::to_string(gold[i].size()) + " gold vs " +
                               std::to_string(pred[i].size()) + " predicted",
                           i);
    }
  }
}

MethodologyResult eval_entity_strict(const TagCorpus& gold, const TagCorpus& pred,
                                     const EvalOptions& options) {
  check_alignment(gold, pred);
  MatchCounts counts;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    merge_counts(counts, match_entities(decode_sequence(gold[i], options),
                                        decode_sequence(pred[i], options)));
  }
  MethodologyResult r;
  r.methodology = MethodologyId::EntityStrict;
  r.report = build_report(counts);
  r.headline_metric = "micro-f1";
  r.headline = r.report.micro.f1;
  r.metrics = {{"micro-f1", r.report.micro.f1},
               {"macro-f1", r.report.macro.f1},
               {"weighted-f1", r.report.weighted.f1}};
  return r;
}

MethodologyResult eval_token_with_O(const TagCorpus& gold, const TagCorpus& pred,
                                    const EvalOptions& options) {
  check_alignment(gold, pred);
  MatchCounts counts;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    merge_counts(counts,
                 token_counts(token_classes_of(gold[i], options.token_classes),
                              token_classes_of(pred[i], options.token_classes)));
  }
  std::set<std::string> exclude;
  if (options.o_policy == OPolicy::ExcludeOFromAverages) exclude.insert("O");
  MethodologyResult r;
  r.methodology = MethodologyId::TokenWithO;
  r.report = build_report(counts, exclude);
  r.headline_metric = "weighted-f1";
  r.headline = r.report.weighted.f1;
  r.metrics = {{"weighted-f1", r.report.weighted.f1},
               {"macro-f1", r.report.macro.f1}};
  return r;
}

MethodologyResult eval_entity_without_O(const TagCorpus& gold, const TagCorpus& pred,
                                        const EvalOptions& options) {
  check_alignment(gold, pred);
  MatchCounts counts;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    merge_counts(
        counts,
        token_counts(
            project_first_token_labels(gold[i], options.scheme, options.decode),
            project_first_token_labels(pred[i], options.scheme, options.decode)));
  }
  MethodologyResult r;
  r.methodology = MethodologyId::EntityWithoutO;
  r.report = build_report(counts, {"O"});
  r.headline_metric = "micro-f1";
  r.headline = r.report.micro.f1;
  const MethodologyResult strict = eval_entity_strict(gold, pred, options);
  r.metrics = {{"micro-f1", r.report.micro.f1},
               {"weighted-f1", r.report.weighted.f1},
               {"macro-f1", r.report.macro.f1},
               {"entity-strict-f1", strict.headline}};
  return r;
}

MethodologyResult eval_offset_exact(const std::vector<StandoffDocument>& gold,
                                    const std::vector<StandoffDocument>& pred,
                                    const EvalOptions& options) {
  auto index = [](const std::vector<StandoffDocument>& docs, const char* side) {
    std::map<std::string, const StandoffDocument*> by_id;
    for (const StandoffDocument& d : docs) {
      if (!by_id.emplace(d.id, &d).second) {
        throw InvalidInputError("duplicate " + std::string(side) +
                                " document id: '" + d.id + "'");
      }
    }
    return by_id;
  };
  const auto gold_by_id = index(gold, "gold");
  const auto pred_by_id = index(pred, "predicted");

  MethodologyResult r;
  r.methodology = MethodologyId::OffsetExact;
  MatchCounts counts;
  for (const auto& [id, gdoc] : gold_by_id) {
    auto it = pred_by_id.find(id);
    if (it == pred_by_id.end()) {
      r.warnings.push_back("document '" + id + "' has no predicted annotations; skipped");
      continue;
    }
    merge_counts(counts,
                 offset_match(flatten_standoff(gdoc->entities, options.nested),
                              flatten_standoff(it->second->entities, options.nested)));
  }
  for (const auto& [id, pdoc] : pred_by_id) {
    (void)pdoc;
    if (!gold_by_id.count(id)) {
      r.warnings.push_back("document '" + id + "' has no gold annotations; skipped");
    }
  }
  r.report = build_report(counts);
  r.headline_metric = "micro-f1";
  r.headline = r.report.micro.f1;
  r.metrics = {{"micro-f1", r.report.micro.f1},
               {"macro-f1", r.report.macro.f1},
               {"weighted-f1", r.report.weighted.f1}};
  return r;
}

MethodologyResult evaluate(MethodologyId id, const TagCorpus& gold,
                           const TagCorpus& pred, const EvalOptions& options) {
  switch (id) {
    case MethodologyId::EntityStrict:
      return eval_entity_strict(gold, pred, options);
    case MethodologyId::TokenWithO:
      return eval_token_with_O(gold, pred, options);
    case MethodologyId::EntityWithoutO:
      return eval_entity_without_O(gold, pred, options);
    case MethodologyId::OffsetExact:
      break;
  }
  throw ConfigError("offset-exact requires standoff (.ann) inputs, not tag sequences");
}

std::vector<StandoffEntity> flatten_standoff(std::vector<StandoffEntity> entities,
                                             NestedStrategy strategy) {
  if (entities.size() < 2) return entities;

  if (strategy == NestedStrategy::Error) {
    std::sort(entities.begin(), entities.end(), standoff_position_order);
    std::size_t max_end = envelope(entities.front()).end;
    for (std::size_t k = 1; k < entities.size(); ++k) {
      const Fragment env = envelope(entities[k]);
      if (env.start < max_end) {
        throw NestedEntitiesError("nested or overlapping annotations at offset " +
                                  std::to_string(env.start));
      }
      max_end = std::max(max_end, env.end);
    }
    return entities;
  }

  if (strategy == NestedStrategy::KeepCoarsest) {
    std::sort(entities.begin(), entities.end(), coarser_standoff_first);
    std::vector<StandoffEntity> kept;
    for (StandoffEntity& cand : entities) {
      const bool clash = std::any_of(kept.begin(), kept.end(), [&](const StandoffEntity& k) {
        return envelopes_overlap(cand, k);
      });
      if (!clash) kept.push_back(std::move(cand));
    }
    std::sort(kept.begin(), kept.end(), standoff_position_order);
    return kept;
  }

  // Concatenate: one merged annotation per overlap component, spanning the
  // component's envelope.
  std::sort(entities.begin(), entities.end(), standoff_position_order);
  std::vector<StandoffEntity> out;
  std::size_t group_begin = 0;
  std::size_t group_max_end = envelope(entities.front()).end;
  auto emit_group = [&](std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) {
      out.push_back(std::move(entities[lo]));
      return;
    }
    std::vector<StandoffEntity> members(entities.begin() + lo, entities.begin() + hi);
    std::sort(members.begin(), members.end(), coarser_standoff_first);
    StandoffEntity merged;
    merged.fragments = {Fragment{envelope(entities[lo]).start, group_max_end}};
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (k > 0) {
        merged.id += '+';
        merged.label += '+';
      }
      merged.id += members[k].id;
      merged.label += members[k].label;
    }
    out.push_back(std::move(merged));
  };
  for (std::size_t k = 1; k < entities.size(); ++k) {
    const Fragment env = envelope(entities[k]);
    if (env.start >= group_max_end) {
      emit_group(group_begin, k);
      group_begin = k;
      group_max_end = env.end;
    } else {
      group_max_end = std::max(group_max_end, env.end);
    }
  }
  emit_group(group_begin, entities.size());
  return out;
}

ComparisonTable compare_methodologies(const TagCorpus& gold, const TagCorpus& pred,
                                      const std::vector<MethodologyId>& methodologies,
                                      const EvalOptions& options,
                                      const std::string& model_name) {
  if (methodologies.empty()) {
    throw InvalidInputError("at least one methodology is required");
  }
  std::vector<MethodologyResult> results;
  results.reserve(methodologies.size());
  for (MethodologyId id : methodologies) {
    results.push_back(evaluate(id, gold, pred, options));
  }

  static const std::vector<std::string> kColumnOrder = {
      "weighted-f1", "macro-f1", "micro-f1", "entity-strict-f1"};
  ComparisonTable table;
  for (const std::string& col : kColumnOrder) {
    const bool used = std::any_of(results.begin(), results.end(), [&](const auto& r) {
      return std::any_of(r.metrics.begin(), r.metrics.end(),
                         [&](const auto& m) { return m.first == col; });
    });
    if (used) table.columns.push_back(col);
  }
  for (const MethodologyResult& r : results) {
    ComparisonTable::Row row;
    row.methodology = std::string(to_string(r.methodology));
    row.model = model_name;
    for (const std::string& col : table.columns) {
      AggregateScore cell;
      cell.metric = col;
      const bool has = std::any_of(r.metrics.begin(), r.metrics.end(),
                                   [&](const auto& m) { return m.first == col; });
      if (has) {
        cell.mean = metric_of(r, col);
        cell.std_dev = 0.0;
        cell.n = 1;
      }
      row.cells.push_back(std::move(cell));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<AggregateScore> aggregate_runs(const std::vector<RunScores>& runs) {
  if (runs.empty()) {
    throw InvalidInputError("no runs to aggregate");
  }
  std::map<std::string, std::vector<double>> by_metric;
  for (const RunScores& run : runs) {
    for (const auto& [name, value] : run.metrics) by_metric[name].push_back(value);
  }
  std::vector<AggregateScore> out;
  out.reserve(by_metric.size());
  for (const auto& [name, values] : by_metric) {
    AggregateScore a;
    a.metric = name;
    a.n = values.size();
    double sum = 0.0;
    for (double v : values) sum += v;
    a.mean = sum / static_cast<double>(values.size());
    const bool all_equal =
        std::all_of(values.begin(), values.end(), [&](double v) { return v == values.front(); });
    if (values.size() > 1 && !all_equal) {
      double ss = 0.0;
      for (double v : values) ss += (v - a.mean) * (v - a.mean);
      a.std_dev = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace nereval
