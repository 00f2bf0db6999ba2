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

#ifndef NEREVAL_CARBON_HPP_
#define NEREVAL_CARBON_HPP_

#include <string_view>

namespace nereval {

// Grid carbon intensity default, kg CO2-eq per kWh (French grid yearly
// average; override per run for other grids).
inline constexpr double kDefaultIntensity = 0.034;

struct TrainingRun {
  double gpu_count = 0.0;
  double hours = 0.0;                          // wall clock
  double gpu_power_kw = 0.0;                   // per device
  double intensity = kDefaultIntensity;        // kg CO2-eq per kWh
  double pue = 1.0;                            // datacenter overhead multiplier
};

struct EmissionEstimate {
  double gpu_hours = 0.0;
  double energy_kwh = 0.0;
  double co2_kg = 0.0;
};

// co2 = gpus x hours x power x PUE x intensity; linear in every input.
EmissionEstimate estimate_emissions(const TrainingRun& run);

// Per-device draw for the supported accelerators, in kW.
double default_power_kw(std::string_view device);

}  // namespace nereval

#endif  // NEREVAL_CARBON_HPP_
