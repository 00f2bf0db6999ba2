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
// Deterministic input generators for property tests. Every test seeds its
// own engine, so failures reproduce.

#ifndef NEREVAL_TESTS_RANDOM_GEN_HPP_
#define NEREVAL_TESTS_RANDOM_GEN_HPP_

#include <random>
#include <string>
#include <vector>

#include "nereval/tagging.hpp"

namespace gen {

inline const std::vector<std::string>& labels4() {
  static const std::vector<std::string> labels = {"PER", "LOC", "DISO", "ANAT"};
  return labels;
}

inline std::string pick_label(std::mt19937& rng, std::size_t max_labels = 4) {
  std::uniform_int_distribution<std::size_t> d(0, max_labels - 1);
  return labels4()[d(rng)];
}

// Arbitrary tags, ill-formed ones included: orphan and type-switching I,
// misplaced B, the occasional unparseable string.
inline nereval::TagSequence random_tags(std::mt19937& rng, std::size_t max_len = 30) {
  std::uniform_int_distribution<std::size_t> len_d(0, max_len);
  std::uniform_int_distribution<int> kind_d(0, 99);
  const std::size_t len = len_d(rng);
  nereval::TagSequence seq;
  seq.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    const int kind = kind_d(rng);
    if (kind < 40) {
      seq.push_back(nereval::Tag::outside());
    } else if (kind < 65) {
      seq.push_back(nereval::Tag::of('B', pick_label(rng)));
    } else if (kind < 90) {
      seq.push_back(nereval::Tag::of('I', pick_label(rng)));
    } else if (kind < 94) {
      seq.push_back(nereval::Tag::of('L', pick_label(rng)));
    } else if (kind < 98) {
      seq.push_back(nereval::Tag::of('U', pick_label(rng)));
    } else {
      seq.push_back(nereval::Tag::parse("JUNK"));  // unparseable
    }
  }
  return seq;
}

// Well-formed IOB2 of exactly the given length, built positionally
// (no encoder involved).
inline nereval::TagSequence random_valid_iob2_like(std::mt19937& rng,
                                                   std::size_t len) {
  std::uniform_int_distribution<int> coin(0, 99);
  nereval::TagSequence seq;
  seq.reserve(len);
  std::size_t i = 0;
  while (i < len) {
    if (coin(rng) < 45) {
      const std::string label = pick_label(rng);
      seq.push_back(nereval::Tag::of('B', label));
      ++i;
      while (i < len && coin(rng) < 40) {
        seq.push_back(nereval::Tag::of('I', label));
        ++i;
      }
    } else {
      seq.push_back(nereval::Tag::outside());
      ++i;
    }
  }
  return seq;
}

// Well-formed IOB2 with a random length.
inline nereval::TagSequence random_valid_iob2(std::mt19937& rng,
                                              std::size_t max_len = 30) {
  std::uniform_int_distribution<std::size_t> len_d(0, max_len);
  return random_valid_iob2_like(rng, len_d(rng));
}

// Sorted, pairwise non-overlapping spans inside [0, length).
inline std::vector<nereval::EntitySpan> random_entity_set(std::mt19937& rng,
                                                          std::size_t length) {
  std::vector<nereval::EntitySpan> out;
  std::uniform_int_distribution<int> coin(0, 99);
  std::size_t pos = 0;
  while (pos < length) {
    if (coin(rng) < 35) {
      std::uniform_int_distribution<std::size_t> span_d(0, 2);
      const std::size_t end = std::min(length - 1, pos + span_d(rng));
      out.push_back(nereval::EntitySpan{gen::pick_label(rng), pos, end});
      pos = end + 2;  // gap so spans stay separated
    } else {
      ++pos;
    }
  }
  return out;
}

// Possibly nested/overlapping spans, for the flattening properties.
inline std::vector<nereval::EntitySpan> random_nested_set(std::mt19937& rng,
                                                          std::size_t length = 40,
                                                          std::size_t max_spans = 12) {
  std::uniform_int_distribution<std::size_t> count_d(0, max_spans);
  std::uniform_int_distribution<std::size_t> pos_d(0, length - 1);
  const std::size_t count = count_d(rng);
  std::vector<nereval::EntitySpan> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t a = pos_d(rng);
    std::size_t b = pos_d(rng);
    if (a > b) std::swap(a, b);
    out.push_back(nereval::EntitySpan{gen::pick_label(rng), a, b});
  }
  return out;
}

}  // namespace gen

#endif  // NEREVAL_TESTS_RANDOM_GEN_HPP_
