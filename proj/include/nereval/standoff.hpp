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

#ifndef NEREVAL_STANDOFF_HPP_
#define NEREVAL_STANDOFF_HPP_

#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

namespace nereval {

// Character-offset span, end exclusive.
struct Fragment {
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const Fragment&) const = default;
};

inline bool operator<(const Fragment& a, const Fragment& b) {
  return std::tie(a.start, a.end) < std::tie(b.start, b.end);
}

// One standoff annotation; discontinuous mentions carry several fragments.
struct StandoffEntity {
  std::string id;
  std::string label;
  std::vector<Fragment> fragments;
  std::string surface;  // covered text when the file provides it

  bool operator==(const StandoffEntity&) const = default;
};

struct StandoffDocument {
  std::string id;
  std::vector<StandoffEntity> entities;
};

}  // namespace nereval

#endif  // NEREVAL_STANDOFF_HPP_
