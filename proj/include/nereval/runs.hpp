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

#ifndef NEREVAL_RUNS_HPP_
#define NEREVAL_RUNS_HPP_

#include <map>
#include <string>

namespace nereval {

// Scores of one seeded evaluation run. Values are stored verbatim;
// percentages and fractions aggregate the same way.
struct RunScores {
  long long seed = 0;
  std::map<std::string, double> metrics;

  bool operator==(const RunScores&) const = default;
};

}  // namespace nereval

#endif  // NEREVAL_RUNS_HPP_
