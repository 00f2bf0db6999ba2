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

#ifndef NEREVAL_UTF8_HPP_
#define NEREVAL_UTF8_HPP_

#include <cstddef>
#include <string_view>

namespace nereval {

/// Byte offset of the first invalid UTF-8 byte, or npos if the whole
/// buffer is well-formed. Rejects overlong encodings, surrogates and
/// code points above U+10FFFF.
std::size_t find_invalid_utf8(std::string_view bytes);

inline bool is_valid_utf8(std::string_view bytes) {
  return find_invalid_utf8(bytes) == std::string_view::npos;
}

/// Length in bytes of the UTF-8 code point starting at `pos`. Returns 1
/// for invalid lead bytes so callers always make progress.
std::size_t utf8_char_len(std::string_view bytes, std::size_t pos);

}  // namespace nereval

#endif  // NEREVAL_UTF8_HPP_
