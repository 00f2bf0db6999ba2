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

#ifndef NEREVAL_ERRORS_HPP_
#define NEREVAL_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nereval {

/// Base class for every error the toolkit raises on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad configuration: unknown scheme, methodology, output format, device.
struct ConfigError : Error {
  using Error::Error;
};

/// Structurally invalid in-memory input: overlapping spans, out-of-bounds
/// indices, mismatched lengths, non-positive quantities, zero runs.
struct InvalidInputError : Error {
  using Error::Error;
};

/// flatten_nested(strategy = Error) found nested or overlapping entities.
struct NestedEntitiesError : InvalidInputError {
  using InvalidInputError::InvalidInputError;
};

/// Malformed file contents. `line` is 1-based; 0 when unknown.
struct ParseError : Error {
  std::size_t line;
  ParseError(const std::string& msg, std::size_t line_no = 0)
      : Error(line_no ? "line " + std::to_string(line_no) + ": " + msg : msg),
        line(line_no) {}
};

/// Input bytes are not valid UTF-8.
struct EncodingError : ParseError {
  using ParseError::ParseError;
};

/// JSON input does not follow the expected schema.
struct SchemaError : Error {
  using Error::Error;
};

/// Gold and predicted corpora do not line up sequence-by-sequence or
/// token-by-token. `index` is the 0-based sequence index; npos when the
/// mismatch is at corpus level.
struct AlignmentError : Error {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t index;
  AlignmentError(const std::string& msg, std::size_t seq_index = npos)
      : Error(msg), index(seq_index) {}
};

}  // namespace nereval

#endif  // NEREVAL_ERRORS_HPP_
