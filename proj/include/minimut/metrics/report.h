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

#ifndef MINIMUT_METRICS_REPORT_H_
#define MINIMUT_METRICS_REPORT_H_

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "minimut/executor/campaign.h"
#include "minimut/executor/config.h"
#include "minimut/metrics/cost.h"
#include "minimut/metrics/diff.h"

namespace minimut {

// Result artifacts exist but cannot be read back.
class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Generation wall times, kept in <outputDir>/generation.json.
struct GenerationTimes {
  std::optional<double> schemata;
  std::optional<double> traditional;
};

GenerationTimes ReadGenerationTimes(const std::filesystem::path& output_dir);
// Records one strategy's time, keeping the other's.
void RecordGenerationTime(const std::filesystem::path& output_dir,
                          Strategy strategy, double seconds);

struct StrategyResult {
  KillingMatrix matrix;
  TimeReport time;
};

// Reads ResultDir(config, strategy); nullopt when it holds no matrix.
std::optional<StrategyResult> LoadStrategyResult(const CampaignConfig& config,
                                                 Strategy strategy);

struct CostReport {
  std::optional<double> gen_time_schemata;
  std::optional<double> gen_time_traditional;
  std::optional<std::uintmax_t> disk_schemata;
  std::optional<std::uintmax_t> disk_traditional;
  std::optional<double> saving_time_percent;
  std::optional<double> saving_space_percent;
  std::optional<double> run_time_schemata;
  std::optional<double> run_time_traditional;
  std::optional<double> run_saving_percent;
};

struct CampaignReport {
  Policy policy = Policy::kFullFail;
  CostReport cost;
  std::optional<Score> score_schemata;
  std::optional<Score> score_traditional;
  std::optional<DivergenceReport> divergence;
  std::optional<CarbonEstimate> carbon_schemata;
  std::optional<CarbonEstimate> carbon_traditional;
  std::optional<double> energy_difference_percent;
  std::optional<double> carbon_difference_percent;
};

// Gathers whatever the output directory holds. Throws ReportError when no
// strategy has results or an artifact is corrupt.
CampaignReport BuildReport(const CampaignConfig& config);

// Fixed key order; absent values are "n/a".
std::string ReportJson(const CampaignReport& report);
std::string ReportSummary(const CampaignReport& report);

}  // namespace minimut

#endif  // MINIMUT_METRICS_REPORT_H_
