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

#include "minimut/metrics/cost.h"

#include "minimut/lang/project.h"

namespace minimut {

namespace fs = std::filesystem;

std::uintmax_t SourceBytes(const fs::path& dir) {
  std::error_code ec;
  if (!fs::exists(dir, ec)) return 0;
  std::uintmax_t total = 0;
  fs::recursive_directory_iterator it(dir, ec);
  if (ec) throw IoError(dir, ec.message());
  for (const fs::directory_entry& entry : it) {
    if (entry.is_regular_file() && entry.path().extension() == ".mini") {
      total += entry.file_size();
    }
  }
  return total;
}

DiskUsage MeasureDisk(const fs::path& output_dir) {
  DiskUsage usage;
  if (fs::exists(output_dir / "schemata")) {
    usage.schemata = SourceBytes(output_dir / "schemata");
  }
  if (fs::exists(output_dir / "traditional")) {
    usage.traditional =
        SourceBytes(output_dir / "original") + SourceBytes(output_dir / "traditional");
  }
  if (usage.schemata && usage.traditional) {
    usage.saving_percent = SavingPercent(static_cast<double>(*usage.schemata),
                                         static_cast<double>(*usage.traditional));
  }
  return usage;
}

std::optional<double> SavingPercent(double schemata, double traditional) {
  if (!(traditional > 0)) return std::nullopt;
  return 100.0 * (1.0 - schemata / traditional);
}

std::optional<double> PercentDifference(double schemata, double traditional) {
  if (!(schemata > 0)) return std::nullopt;
  return 100.0 * (traditional - schemata) / schemata;
}

CarbonEstimate EstimateCarbon(double runtime_hours, const HardwareConfig& hw) {
  CarbonEstimate e;
  e.runtime_hours = runtime_hours;
  e.hardware = hw;
  const double watts =
      hw.cores * hw.power_per_core_w * hw.usage_factor + hw.memory_gb * hw.power_per_gb_w;
  e.energy_kwh = runtime_hours * watts * hw.pue / 1000.0;
  e.carbon_gco2e = e.energy_kwh * hw.carbon_intensity;
  return e;
}

}  // namespace minimut
