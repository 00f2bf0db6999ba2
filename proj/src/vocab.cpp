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

#include "nereval/vocab.hpp"

#include <algorithm>
#include <cctype>

#include "nereval/errors.hpp"
#include "nereval/utf8.hpp"

namespace nereval {

namespace {

std::string_view strip_marker(std::string_view entry, const MarkerConvention& conv) {
  if (!conv.word_initial.empty() && entry.starts_with(conv.word_initial)) {
    return entry.substr(conv.word_initial.size());
  }
  if (!conv.continuation.empty() && entry.starts_with(conv.continuation)) {
    return entry.substr(conv.continuation.size());
  }
  return entry;
}

}  // namespace

std::vector<std::string> parse_vocab_file(std::string_view text) {
  const std::size_t bad = find_invalid_utf8(text);
  if (bad != std::string_view::npos) {
    const std::size_t line =
        1 + static_cast<std::size_t>(
                std::count(text.begin(), text.begin() + static_cast<long>(bad), '\n'));
    throw EncodingError("invalid UTF-8 byte", line);
  }
  std::vector<std::string> entries;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::size_t tab = line.find('\t');
    if (tab != std::string_view::npos) line = line.substr(0, tab);
    if (!line.empty()) entries.emplace_back(line);
    if (nl == text.size()) break;
    pos = nl + 1;
  }
  return entries;
}

Vocabulary normalize_vocab(const std::vector<std::string>& raw,
                           const MarkerConvention& convention) {
  if (raw.empty()) {
    throw InvalidInputError("vocabulary is empty");
  }
  Vocabulary vocab;
  for (const std::string& entry : raw) {
    const std::string_view bare = strip_marker(entry, convention);
    if (bare.empty()) {
      vocab.marker_only_dropped += 1;
      continue;
    }
    if (!vocab.entries.emplace(bare).second) {
      vocab.duplicates_collapsed += 1;
    }
  }
  if (vocab.entries.empty()) {
    throw InvalidInputError("vocabulary is empty after marker stripping");
  }
  for (const std::string& e : vocab.entries) {
    vocab.max_entry_bytes = std::max(vocab.max_entry_bytes, e.size());
  }
  return vocab;
}

IntersectionStats intersection_stats(const Vocabulary& a, const Vocabulary& b) {
  IntersectionStats stats;
  stats.size_a = a.entries.size();
  stats.size_b = b.entries.size();
  // Walk the smaller set, probe the larger.
  const auto& small = stats.size_a <= stats.size_b ? a.entries : b.entries;
  const auto& large = stats.size_a <= stats.size_b ? b.entries : a.entries;
  for (const std::string& e : small) {
    if (large.count(e)) stats.common += 1;
  }
  if (stats.size_a > 0) {
    stats.rate_a = static_cast<double>(stats.common) / static_cast<double>(stats.size_a);
  }
  if (stats.size_b > 0) {
    stats.rate_b = static_cast<double>(stats.common) / static_cast<double>(stats.size_b);
  }
  const std::size_t union_size = stats.size_a + stats.size_b - stats.common;
  if (union_size > 0) {
    stats.jaccard = static_cast<double>(stats.common) / static_cast<double>(union_size);
  }
  return stats;
}

Segmentation greedy_segment(const std::string& word, const Vocabulary& vocab) {
  Segmentation seg;
  seg.word = word;
  std::size_t pos = 0;
  while (pos < word.size()) {
    const std::size_t remaining = word.size() - pos;
    const std::size_t window = std::min(remaining, vocab.max_entry_bytes);
    std::size_t matched = 0;
    for (std::size_t len = window; len >= 1; --len) {
      if (vocab.entries.count(word.substr(pos, len))) {
        matched = len;
        break;
      }
    }
    if (matched > 0) {
      seg.pieces.push_back(Piece{word.substr(pos, matched), false});
      pos += matched;
    } else {
      const std::size_t len = utf8_char_len(word, pos);
      seg.pieces.push_back(Piece{word.substr(pos, len), true});
      pos += len;
    }
  }
  return seg;
}

FertilityStats fertility(const std::vector<std::string>& corpus,
                         const Vocabulary& vocab) {
  std::vector<std::size_t> counts;
  counts.reserve(corpus.size());
  std::size_t total = 0;
  for (const std::string& word : corpus) {
    if (word.empty()) continue;
    const std::size_t n = greedy_segment(word, vocab).pieces.size();
    counts.push_back(n);
    total += n;
  }
  if (counts.empty()) {
    throw InvalidInputError("fertility needs a non-empty word list");
  }
  std::sort(counts.begin(), counts.end());
  FertilityStats stats;
  stats.words = counts.size();
  stats.mean = static_cast<double>(total) / static_cast<double>(counts.size());
  stats.max = counts.back();
  // Nearest-rank percentile: smallest value with rank >= ceil(0.95 n).
  const std::size_t rank =
      (95 * counts.size() + 99) / 100;  // ceil(0.95 n) in integers
  stats.p95 = static_cast<double>(counts[rank - 1]);
  return stats;
}

std::vector<DiffRow> segmentation_diff(const std::vector<std::string>& words,
                                       const Vocabulary& a, const Vocabulary& b) {
  std::vector<DiffRow> rows;
  rows.reserve(words.size());
  for (const std::string& word : words) {
    auto join = [](const Segmentation& seg) {
      std::string out;
      for (std::size_t i = 0; i < seg.pieces.size(); ++i) {
        if (i > 0) out += '-';
        out += seg.pieces[i].text;
      }
      return out;
    };
    const Segmentation sa = greedy_segment(word, a);
    const Segmentation sb = greedy_segment(word, b);
    rows.push_back(DiffRow{word, join(sa), join(sb), sa.pieces.size(),
                           sb.pieces.size()});
  }
  return rows;
}

std::string fold_case_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace nereval
