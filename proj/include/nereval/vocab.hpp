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
// Subword vocabulary comparison: overlap statistics between a general and
// a specialized vocabulary, greedy longest-match segmentation for
// side-by-side tokenization tables, and fertility (pieces per word).
// Greedy longest match is a deliberate stand-in for real subword
// inference; it gives lossless segmentations and comparable counts
// without the original tokenizer models.

#ifndef NEREVAL_VOCAB_HPP_
#define NEREVAL_VOCAB_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace nereval {

// Marker syntax of the raw vocabulary entries. Both markers are prefixes
// of entries; either or both may be empty.
struct MarkerConvention {
  std::string word_initial;  // e.g. "▁" (SentencePiece)
  std::string continuation;  // e.g. "##" (WordPiece)
};

struct Vocabulary {
  std::set<std::string> entries;  // bare forms, markers stripped
  std::size_t duplicates_collapsed = 0;
  std::size_t marker_only_dropped = 0;
  std::size_t max_entry_bytes = 0;
};

// One entry per line; anything after the first tab is ignored (tolerates
// "piece<TAB>score" dumps).
std::vector<std::string> parse_vocab_file(std::string_view text);

// Strips markers, collapses duplicates, drops entries that were only a
// marker. Throws when nothing remains.
Vocabulary normalize_vocab(const std::vector<std::string>& raw,
                           const MarkerConvention& convention);

struct IntersectionStats {
  std::size_t size_a = 0;
  std::size_t size_b = 0;
  std::size_t common = 0;
  double rate_a = 0.0;  // |a∩b| / |a|, the headline rate
  double rate_b = 0.0;  // |a∩b| / |b|
  double jaccard = 0.0;

  bool operator==(const IntersectionStats&) const = default;
};

IntersectionStats intersection_stats(const Vocabulary& a, const Vocabulary& b);

struct Piece {
  std::string text;
  bool unknown = false;  // single-character fallback, not in the vocabulary

  bool operator==(const Piece&) const = default;
};

struct Segmentation {
  std::string word;
  std::vector<Piece> pieces;  // concatenation of texts == word

  bool operator==(const Segmentation&) const = default;
};

// Left-to-right longest match; where nothing matches, one UTF-8 character
// becomes an unknown piece, so segmentation never fails.
Segmentation greedy_segment(const std::string& word, const Vocabulary& vocab);

struct FertilityStats {
  double mean = 0.0;   // pieces per word
  std::size_t max = 0;
  double p95 = 0.0;    // nearest-rank 95th percentile of piece counts
  std::size_t words = 0;
};

FertilityStats fertility(const std::vector<std::string>& corpus,
                         const Vocabulary& vocab);

struct DiffRow {
  std::string word;
  std::string pieces_a;  // pieces joined with '-'
  std::string pieces_b;
  std::size_t count_a = 0;
  std::size_t count_b = 0;
};

std::vector<DiffRow> segmentation_diff(const std::vector<std::string>& words,
                                       const Vocabulary& a, const Vocabulary& b);

// ASCII-only lowercasing (multibyte characters pass through).
std::string fold_case_ascii(std::string_view s);

}  // namespace nereval

#endif  // NEREVAL_VOCAB_HPP_
