// Copyright 2026 The Minimut Authors
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

#ifndef MINIMUT_METRICS_COST_H_
#define MINIMUT_METRICS_COST_H_

#include <cstdint>
#include <filesystem>
#include <optional>

#include "minimut/executor/config.h"

namespace minimut {

// Bytes of the .mini files under `dir`, recursively; 0 if `dir` is absent.
std::uintmax_t SourceBytes(const std::filesystem::path& dir);

struct DiskUsage {
  std::optional<std::uintmax_t> schemata;
  std::optional<std::uintmax_t> traditional;
  std::optional<double> saving_percent;
};

// Sizes of the generated trees: out/schemata for schemata, out/original
// plus out/traditional for traditional. Reports and metadata are excluded.
DiskUsage MeasureDisk(const std::filesystem::path& output_dir);

// 100 * (1 - schemata / traditional); nullopt when traditional is 0.
std::optional<double> SavingPercent(double schemata, double traditional);

// 100 * (traditional - schemata) / schemata; nullopt when schemata is 0.
std::optional<double> PercentDifference(double schemata, double traditional);

struct CarbonEstimate {
  double runtime_hours = 0;
  HardwareConfig hardware;
  double energy_kwh = 0;
  double carbon_gco2e = 0;
};

// energy = hours * (cores * W/core * usage + GB * W/GB) * PUE / 1000;
// carbon = energy * intensity.
CarbonEstimate EstimateCarbon(double runtime_hours, const HardwareConfig& hardware);

}  // namespace minimut

#endif  // MINIMUT_METRICS_COST_H_
