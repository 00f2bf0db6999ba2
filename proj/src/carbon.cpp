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

#include "nereval/carbon.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "nereval/errors.hpp"

namespace nereval {

EmissionEstimate estimate_emissions(const TrainingRun& run) {
  auto require_positive = [](double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw InvalidInputError(std::string(name) + " must be a positive number");
    }
  };
  require_positive(run.gpu_count, "gpu count");
  require_positive(run.hours, "hours");
  require_positive(run.gpu_power_kw, "gpu power");
  require_positive(run.intensity, "carbon intensity");
  require_positive(run.pue, "PUE");

  EmissionEstimate e;
  e.gpu_hours = run.gpu_count * run.hours;
  e.energy_kwh = e.gpu_hours * run.gpu_power_kw * run.pue;
  e.co2_kg = e.energy_kwh * run.intensity;
  return e;
}

double default_power_kw(std::string_view device) {
  std::string upper(device);
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "V100") return 0.300;
  if (upper == "A100") return 0.250;
  throw ConfigError("no default power for device '" + std::string(device) +
                    "'; pass an explicit per-device power in kW");
}

}  // namespace nereval
