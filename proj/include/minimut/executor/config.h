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

#ifndef MINIMUT_EXECUTOR_CONFIG_H_
#define MINIMUT_EXECUTOR_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "minimut/mutagen/iterator.h"
#include "minimut/operators/catalog.h"

namespace minimut {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Strategy { kSchemata, kTraditional, kBoth };
enum class Policy { kFullFail, kFastFail };

std::string_view StrategyName(Strategy strategy);
std::string_view PolicyName(Policy policy);
std::optional<Strategy> ParseStrategy(std::string_view name);
std::optional<Policy> ParsePolicy(std::string_view name);

// Machine description for the energy estimate. Calculator-style defaults,
// not measurements.
struct HardwareConfig {
  double cores = 4;
  double power_per_core_w = 15.8;
  double usage_factor = 1.0;
  double memory_gb = 16;
  double power_per_gb_w = 0.3725;
  double pue = 1.67;
  double carbon_intensity = 253;  // gCO2e per kWh

  bool operator==(const HardwareConfig&) const = default;
};

struct CampaignConfig {
  std::filesystem::path project_dir;
  std::vector<OperatorKind> operators;
  std::uint64_t seed = 42;
  std::int64_t stride = kDefaultStride;
  Strategy strategy = Strategy::kBoth;
  Policy policy = Policy::kFullFail;
  std::int64_t step_budget = 10000;
  std::int64_t delay_steps = kDefaultDelaySteps;
  std::vector<std::string> exclude;
  std::filesystem::path output_dir;
  HardwareConfig hardware;

  GenerationOptions Generation() const;

  bool operator==(const CampaignConfig&) const = default;
};

// Parses and validates a config.json document. Relative paths resolve
// against `base_dir`. Unknown keys, unknown operators and out-of-range
// values raise ConfigError, as does an outputDir inside projectDir.
CampaignConfig ParseConfig(std::string_view json,
                           const std::filesystem::path& base_dir);

CampaignConfig LoadConfig(const std::filesystem::path& path);

// Effective configuration with absolute paths; ParseConfig accepts it back
// unchanged.
std::string ConfigJson(const CampaignConfig& config);

}  // namespace minimut

#endif  // MINIMUT_EXECUTOR_CONFIG_H_
