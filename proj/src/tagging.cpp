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

#include "nereval/tagging.hpp"

#include <algorithm>
#include <cctype>

#include "nereval/errors.hpp"

namespace nereval {

namespace {

std::string to_upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

// Effective prefix: a non-O tag without a label behaves like an unparseable
// tag everywhere (it can neither open nor continue a chunk).
char eff_prefix(const Tag& t) {
  if (t.prefix != 'O' && t.prefix != '?' && t.label.empty()) return '?';
  return t.prefix;
}

bool in_alphabet(char p, Scheme scheme) {
  switch (scheme) {
    case Scheme::IOB2:
    case Scheme::IOB1:
      return p == 'B' || p == 'I' || p == 'O';
    case Scheme::BILOU:
      return p == 'B' || p == 'I' || p == 'L' || p == 'O' || p == 'U';
  }
  return false;
}

// True when seq[i-1] can textually carry a continuation of `label`:
// a B- or I- tag with the same label.
bool continuation_context(const TagSequence& seq, std::size_t i,
                          const std::string& label) {
  if (i == 0) return false;
  const char p = eff_prefix(seq[i - 1]);
  return (p == 'B' || p == 'I') && seq[i - 1].label == label;
}

void decode_iob2(const TagSequence& seq, DecodeMode mode,
                 std::vector<EntitySpan>& out) {
  bool open = false;
  std::string cur;
  std::size_t start = 0;
  auto close = [&](std::size_t end) {
    out.push_back(EntitySpan{cur, start, end});
    open = false;
  };
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const char p = eff_prefix(seq[i]);
    if (p == 'B') {
      if (open) close(i - 1);
      cur = seq[i].label;
      start = i;
      open = true;
    } else if (p == 'I') {
      if (open && seq[i].label == cur) continue;
      if (open) close(i - 1);
      if (mode == DecodeMode::Repair) {
        cur = seq[i].label;
        start = i;
        open = true;
      }
    } else {
      if (open) close(i - 1);
    }
  }
  if (open) close(seq.size() - 1);
}

void decode_iob1(const TagSequence& seq, DecodeMode mode,
                 std::vector<EntitySpan>& out) {
  const std::size_t n = seq.size();
  std::size_t i = 0;
  while (i < n) {
    const char p = eff_prefix(seq[i]);
    const std::string& label = seq[i].label;
    bool starts = false;
    if (p == 'I') {
      // I starts a chunk unless it textually continues a same-type mention;
      // a dead run behind an illegal B stays dead in strict mode.
      starts = !continuation_context(seq, i, label);
    } else if (p == 'B') {
      // B is a separator: legal only right after a same-type mention.
      starts = continuation_context(seq, i, label) || mode == DecodeMode::Repair;
    }
    if (!starts) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < n && eff_prefix(seq[j + 1]) == 'I' && seq[j + 1].label == label) ++j;
    out.push_back(EntitySpan{label, i, j});
    i = j + 1;
  }
}

void decode_bilou_strict(const TagSequence& seq, std::vector<EntitySpan>& out) {
  const std::size_t n = seq.size();
  std::size_t i = 0;
  while (i < n) {
    const char p = eff_prefix(seq[i]);
    const std::string& label = seq[i].label;
    if (p == 'U') {
      out.push_back(EntitySpan{label, i, i});
      ++i;
    } else if (p == 'B') {
      std::size_t j = i;
      while (j + 1 < n && eff_prefix(seq[j + 1]) == 'I' && seq[j + 1].label == label) ++j;
      if (j + 1 < n && eff_prefix(seq[j + 1]) == 'L' && seq[j + 1].label == label) {
        out.push_back(EntitySpan{label, i, j + 1});
        i = j + 2;
      } else {
        i = j + 1;  // unclosed chunk emits nothing
      }
    } else {
      ++i;  // orphan I/L and everything else open nothing
    }
  }
}

void decode_bilou_repair(const TagSequence& seq, std::vector<EntitySpan>& out) {
  bool open = false;
  std::string cur;
  std::size_t start = 0;
  auto close = [&](std::size_t end) {
    out.push_back(EntitySpan{cur, start, end});
    open = false;
  };
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const char p = eff_prefix(seq[i]);
    const std::string& label = seq[i].label;
    switch (p) {
      case 'B':
        if (open) close(i - 1);
        cur = label;
        start = i;
        open = true;
        break;
      case 'I':
        if (open && label == cur) break;
        if (open) close(i - 1);
        cur = label;
        start = i;
        open = true;
        break;
      case 'L':
        if (open && label == cur) {
          close(i);
        } else {
          if (open) close(i - 1);
          out.push_back(EntitySpan{label, i, i});
        }
        break;
      case 'U':
        if (open) close(i - 1);
        out.push_back(EntitySpan{label, i, i});
        break;
      default:
        if (open) close(i - 1);
        break;
    }
  }
  if (open) close(seq.size() - 1);
}

bool spans_overlap(const EntitySpan& a, const EntitySpan& b) {
  return a.start <= b.end && b.start <= a.end;
}

// Priority used by both flattening strategies.
bool coarser_first(const EntitySpan& a, const EntitySpan& b) {
  if (a.length() != b.length()) return a.length() > b.length();
  if (a.start != b.start) return a.start < b.start;
  return a.label < b.label;
}

}  // namespace

Scheme parse_scheme(std::string_view name) {
  const std::string u = to_upper(name);
  if (u == "IOB2") return Scheme::IOB2;
  if (u == "IOB1") return Scheme::IOB1;
  if (u == "BILOU") return Scheme::BILOU;
  throw ConfigError("unknown tagging scheme: '" + std::string(name) +
                    "' (expected IOB2, IOB1 or BILOU)");
}

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::IOB2: return "IOB2";
    case Scheme::IOB1: return "IOB1";
    case Scheme::BILOU: return "BILOU";
  }
  return "?";
}

DecodeMode parse_decode_mode(std::string_view name) {
  if (name == "strict") return DecodeMode::Strict;
  if (name == "repair") return DecodeMode::Repair;
  throw ConfigError("unknown decode mode: '" + std::string(name) +
                    "' (expected strict or repair)");
}

NestedStrategy parse_nested_strategy(std::string_view name) {
  if (name == "keep-coarsest") return NestedStrategy::KeepCoarsest;
  if (name == "concatenate") return NestedStrategy::Concatenate;
  if (name == "error") return NestedStrategy::Error;
  throw ConfigError("unknown nested-entity strategy: '" + std::string(name) +
                    "' (expected keep-coarsest, concatenate or error)");
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::OrphanContinuation: return "orphan-I";
    case ViolationKind::TypeSwitch: return "type-switch-I";
    case ViolationKind::InvalidPrefix: return "invalid-prefix";
    case ViolationKind::UnclosedChunk: return "unclosed-chunk";
  }
  return "?";
}

Tag Tag::parse(std::string_view raw) {
  if (raw == "O") return Tag{};
  if (raw.size() >= 3 && raw[1] == '-') {
    const char p = raw[0];
    if (p == 'B' || p == 'I' || p == 'L' || p == 'U' || p == 'E' || p == 'S') {
      return Tag{p, std::string(raw.substr(2))};
    }
  }
  return Tag{'?', std::string(raw)};
}

std::string Tag::str() const {
  if (prefix == 'O') return "O";
  if (prefix == '?') return label;
  std::string out(1, prefix);
  out += '-';
  out += label;
  return out;
}

TagSequence parse_tags(const std::vector<std::string>& raw) {
  TagSequence seq;
  seq.reserve(raw.size());
  for (const std::string& s : raw) seq.push_back(Tag::parse(s));
  return seq;
}

std::vector<SchemeViolation> validate_tags(const TagSequence& seq, Scheme scheme) {
  std::vector<SchemeViolation> out;
  const std::size_t n = seq.size();
  for (std::size_t i = 0; i < n; ++i) {
    const char p = eff_prefix(seq[i]);
    if (!in_alphabet(p, scheme)) {
      out.push_back({i, ViolationKind::InvalidPrefix});
      continue;
    }
    const std::string& label = seq[i].label;
    switch (scheme) {
      case Scheme::IOB2:
        if (p == 'I' && !continuation_context(seq, i, label)) {
          const bool prev_is_mention =
              i > 0 && (eff_prefix(seq[i - 1]) == 'B' || eff_prefix(seq[i - 1]) == 'I');
          out.push_back({i, prev_is_mention ? ViolationKind::TypeSwitch
                                            : ViolationKind::OrphanContinuation});
        }
        break;
      case Scheme::IOB1:
        if (p == 'B' && !continuation_context(seq, i, label)) {
          // B is position-dependent in IOB1: it only separates two adjacent
          // same-type chunks.
          out.push_back({i, ViolationKind::InvalidPrefix});
        }
        break;
      case Scheme::BILOU:
        if (p == 'I' || p == 'L') {
          if (!continuation_context(seq, i, label)) {
            const bool prev_is_mention =
                i > 0 && (eff_prefix(seq[i - 1]) == 'B' || eff_prefix(seq[i - 1]) == 'I');
            out.push_back({i, prev_is_mention ? ViolationKind::TypeSwitch
                                              : ViolationKind::OrphanContinuation});
          }
        } else if (p == 'B') {
          std::size_t j = i;
          while (j + 1 < n && eff_prefix(seq[j + 1]) == 'I' && seq[j + 1].label == label) ++j;
          const bool closed =
              j + 1 < n && eff_prefix(seq[j + 1]) == 'L' && seq[j + 1].label == label;
          if (!closed) out.push_back({i, ViolationKind::UnclosedChunk});
        }
        break;
    }
  }
  return out;
}

std::vector<EntitySpan> decode_entities(const TagSequence& seq, Scheme scheme,
                                        DecodeMode mode) {
  std::vector<EntitySpan> out;
  if (seq.empty()) return out;
  switch (scheme) {
    case Scheme::IOB2:
      decode_iob2(seq, mode, out);
      break;
    case Scheme::IOB1:
      decode_iob1(seq, mode, out);
      break;
    case Scheme::BILOU:
      if (mode == DecodeMode::Strict) {
        decode_bilou_strict(seq, out);
      } else {
        decode_bilou_repair(seq, out);
      }
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

TagSequence encode_entities(std::vector<EntitySpan> entities, std::size_t length,
                            Scheme scheme) {
  std::sort(entities.begin(), entities.end());
  for (std::size_t k = 0; k < entities.size(); ++k) {
    const EntitySpan& e = entities[k];
    if (e.label.empty()) {
      throw InvalidInputError("entity label must be non-empty");
    }
    if (e.start > e.end || e.end >= length) {
      throw InvalidInputError("entity span [" + std::to_string(e.start) + ", " +
                              std::to_string(e.end) + "] out of bounds for length " +
                              std::to_string(length));
    }
    if (k > 0 && e.start <= entities[k - 1].end) {
      throw InvalidInputError("overlapping entities at token " +
                              std::to_string(e.start));
    }
  }
  TagSequence tags(length, Tag::outside());
  std::size_t prev_end = 0;
  std::string prev_label;
  bool has_prev = false;
  for (const EntitySpan& e : entities) {
    switch (scheme) {
      case Scheme::IOB2:
        tags[e.start] = Tag::of('B', e.label);
        for (std::size_t i = e.start + 1; i <= e.end; ++i) tags[i] = Tag::of('I', e.label);
        break;
      case Scheme::IOB1: {
        const bool adjacent_same =
            has_prev && prev_label == e.label && prev_end + 1 == e.start;
        tags[e.start] = Tag::of(adjacent_same ? 'B' : 'I', e.label);
        for (std::size_t i = e.start + 1; i <= e.end; ++i) tags[i] = Tag::of('I', e.label);
        break;
      }
      case Scheme::BILOU:
        if (e.start == e.end) {
          tags[e.start] = Tag::of('U', e.label);
        } else {
          tags[e.start] = Tag::of('B', e.label);
          for (std::size_t i = e.start + 1; i < e.end; ++i) tags[i] = Tag::of('I', e.label);
          tags[e.end] = Tag::of('L', e.label);
        }
        break;
    }
    prev_end = e.end;
    prev_label = e.label;
    has_prev = true;
  }
  return tags;
}

std::vector<EntitySpan> flatten_nested(std::vector<EntitySpan> entities,
                                       NestedStrategy strategy) {
  if (entities.size() < 2) return entities;

  if (strategy == NestedStrategy::Error) {
    std::vector<EntitySpan> sorted = entities;
    std::sort(sorted.begin(), sorted.end());
    std::size_t max_end = sorted.front().end;
    for (std::size_t k = 1; k < sorted.size(); ++k) {
      if (sorted[k].start <= max_end) {
        throw NestedEntitiesError("nested or overlapping entities at token " +
                                  std::to_string(sorted[k].start));
      }
      max_end = std::max(max_end, sorted[k].end);
    }
    return sorted;
  }

  if (strategy == NestedStrategy::KeepCoarsest) {
    std::sort(entities.begin(), entities.end(), coarser_first);
    std::vector<EntitySpan> kept;
    for (const EntitySpan& cand : entities) {
      const bool clash = std::any_of(kept.begin(), kept.end(), [&](const EntitySpan& k) {
        return spans_overlap(cand, k);
      });
      if (!clash) kept.push_back(cand);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
  }

  // Concatenate: merge each connected component of overlapping spans.
  std::sort(entities.begin(), entities.end());
  std::vector<EntitySpan> out;
  std::size_t group_begin = 0;
  std::size_t group_max_end = entities.front().end;
  auto emit_group = [&](std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) {
      out.push_back(entities[lo]);
      return;
    }
    std::vector<EntitySpan> members(entities.begin() + lo, entities.begin() + hi);
    std::sort(members.begin(), members.end(), coarser_first);
    EntitySpan merged;
    merged.start = entities[lo].start;
    merged.end = group_max_end;
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (k > 0) merged.label += '+';
      merged.label += members[k].label;
    }
    out.push_back(std::move(merged));
  };
  for (std::size_t k = 1; k < entities.size(); ++k) {
    if (entities[k].start > group_max_end) {
      emit_group(group_begin, k);
      group_begin = k;
      group_max_end = entities[k].end;
    } else {
      group_max_end = std::max(group_max_end, entities[k].end);
    }
  }
  emit_group(group_begin, entities.size());
  return out;
}

std::vector<std::string> project_first_token_labels(const TagSequence& seq,
                                                    Scheme scheme, DecodeMode mode) {
  std::vector<std::string> out(seq.size(), "O");
  for (const EntitySpan& e : decode_entities(seq, scheme, mode)) {
    out[e.start] = e.label;
  }
  return out;
}

}  // namespace nereval
