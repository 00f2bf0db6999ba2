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

#ifndef NEREVAL_TAGGING_HPP_
#define NEREVAL_TAGGING_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace nereval {

/// Supported tagging schemes. IOB2 is the primary scheme; IOB1 and BILOU
/// are provided as extensions.
enum class Scheme { IOB2, IOB1, BILOU };

Scheme parse_scheme(std::string_view name);  // throws ConfigError
std::string_view to_string(Scheme scheme);

/// One per-token tag. `prefix` is the scheme letter ('O','B','I','L','U',
/// 'E','S') or '?' for anything that does not parse as "<PREFIX>-<LABEL>"
/// or bare "O". For '?' the label holds the raw text verbatim so that
/// formatting round-trips. Labels may themselves contain hyphens; the
/// split happens on the first hyphen only.
struct Tag {
  char prefix = 'O';
  std::string label;

  static Tag parse(std::string_view raw);
  static Tag outside() { return Tag{}; }
  static Tag of(char prefix, std::string label) {
    return Tag{prefix, std::move(label)};
  }

  bool is_outside() const { return prefix == 'O'; }
  std::string str() const;

  bool operator==(const Tag&) const = default;
};

using TagSequence = std::vector<Tag>;

TagSequence parse_tags(const std::vector<std::string>& raw);

/// Why a position violates its scheme.
///   OrphanContinuation: I (or L in BILOU) with no open chunk of its type.
///   TypeSwitch:         I/L continuing a chunk of a different type.
///   InvalidPrefix:      prefix unknown to the scheme, an unparseable tag,
///                       or (IOB1) a B- with no adjacent same-type mention.
///   UnclosedChunk:      BILOU only: a B whose chunk is never closed by L.
enum class ViolationKind { OrphanContinuation, TypeSwitch, InvalidPrefix, UnclosedChunk };

std::string_view to_string(ViolationKind kind);

struct SchemeViolation {
  std::size_t position;
  ViolationKind kind;
  bool operator==(const SchemeViolation&) const = default;
};

/// Every position violating the scheme, in position order. Empty iff the
/// sequence is well-formed (in which case strict and repair decoding agree).
std::vector<SchemeViolation> validate_tags(const TagSequence& seq, Scheme scheme);

/// A typed token-index span, end inclusive.
struct EntitySpan {
  std::string label;
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start + 1; }
  bool operator==(const EntitySpan&) const = default;
};

/// Canonical order: (start, end, label).
inline bool operator<(const EntitySpan& a, const EntitySpan& b) {
  return std::tie(a.start, a.end, a.label) < std::tie(b.start, b.end, b.label);
}

/// Strict mode admits only spans opened by a legal scheme start; ill-formed
/// runs produce no entity. Repair mode treats each orphan or type-switch
/// continuation as a fresh B and emits unclosed BILOU chunks.
enum class DecodeMode { Strict, Repair };

DecodeMode parse_decode_mode(std::string_view name);  // throws ConfigError

/// Decode a tag sequence into entity spans. Total: never throws on tag
/// content. Output is sorted by (start, end, label) and never overlaps.
std::vector<EntitySpan> decode_entities(const TagSequence& seq, Scheme scheme,
                                        DecodeMode mode);

/// Inverse of strict decoding. Entities must be pairwise non-overlapping
/// and lie inside [0, length); otherwise InvalidInputError.
TagSequence encode_entities(std::vector<EntitySpan> entities, std::size_t length,
                            Scheme scheme);

/// What to do with nested or overlapping entities.
///   KeepCoarsest: drop every span strictly contained in another; remaining
///     overlaps are resolved greedily in priority order (length desc, start
///     asc, label asc) so the output never overlaps.
///   Concatenate: replace each maximal group of mutually overlapping spans
///     by its envelope, labeled by joining member labels with '+' ordered by
///     (length desc, start asc, label asc).
///   Error: raise NestedEntitiesError if any two spans overlap.
enum class NestedStrategy { KeepCoarsest, Concatenate, Error };

NestedStrategy parse_nested_strategy(std::string_view name);  // throws ConfigError

std::vector<EntitySpan> flatten_nested(std::vector<EntitySpan> entities,
                                       NestedStrategy strategy);

/// One label per token: the entity label at the first token of each decoded
/// entity, "O" everywhere else.
std::vector<std::string> project_first_token_labels(
    const TagSequence& seq, Scheme scheme, DecodeMode mode = DecodeMode::Strict);

}  // namespace nereval

#endif  // NEREVAL_TAGGING_HPP_
