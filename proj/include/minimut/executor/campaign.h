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

#ifndef MINIMUT_EXECUTOR_CAMPAIGN_H_
#define MINIMUT_EXECUTOR_CAMPAIGN_H_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "minimut/executor/config.h"

namespace minimut {

// Per-mutant, per-test statuses. Row −1 (the original) comes first; cells a
// fastFail run skipped are empty.
struct KillingMatrix {
  std::vector<std::string> tests;
  std::vector<std::int64_t> muids;
  std::vector<std::vector<std::optional<int>>> cells;

  // "mutant;<test>;..." then "<muid>;<status>;..." with LF line ends.
  std::string ToCsv() const;
  static KillingMatrix FromCsv(std::string_view csv);

  bool operator==(const KillingMatrix&) const = default;
};

using TimePoint = std::chrono::system_clock::time_point;

// "2026-03-01 12:00:00.123456789+00:00"
std::string FormatTimestamp(TimePoint t);
TimePoint ParseTimestamp(std::string_view text);

// Timestamped BEGIN/END labels of a campaign.
class TimeReport {
 public:
  struct Line {
    TimePoint time;
    std::string label;
  };

  void Mark(std::string label);
  void Append(const TimeReport& other);

  const std::vector<Line>& lines() const { return lines_; }
  std::size_t Count(std::string_view label_prefix) const;
  // Seconds between START TIME and END TIME.
  double Seconds() const;

  // "<timestamp>;<LABEL>" per line.
  std::string ToCsv() const;
  static TimeReport FromCsv(std::string_view csv);

 private:
  std::vector<Line> lines_;
};

// Statuses of one mutant's tests in declared order. fastFail drops every
// cell after the first nonzero one.
std::vector<std::optional<int>> ApplyPolicy(const std::vector<int>& statuses,
                                            Policy policy);

class EmptyCampaign : public std::domain_error {
 public:
  EmptyCampaign() : std::domain_error("no mutants generated; score is n/a") {}
};

struct Score {
  std::int64_t generated = 0;
  std::int64_t alive = 0;
  std::int64_t dead = 0;
  double percent = 0;  // one decimal

  bool operator==(const Score&) const = default;
};

Score ComputeScore(std::int64_t generated, std::int64_t dead);
// Dead rows are the mutant rows with any nonzero cell.
Score ComputeScore(const KillingMatrix& matrix);
// "307/984 (31.2%)"
std::string FormatScore(const Score& score);

class OriginalSuiteRed : public std::runtime_error {
 public:
  explicit OriginalSuiteRed(std::vector<std::string> failing);
  const std::vector<std::string>& failing() const { return failing_; }

 private:
  std::vector<std::string> failing_;
};

struct CampaignResult {
  KillingMatrix matrix;
  TimeReport time;
  std::filesystem::path result_dir;
  // Places where a device-backed run would restart the emulator.
  std::vector<std::string> restart_log;
};

// Runs the schemata campaign: one build of the woven tree, then every
// mutant selected through METFORD_MUID. Generates the tree first if
// `output_dir`/schemata is missing. Writes killing-matrix.csv, time.csv,
// restart.log and per-test artifacts to ResultDir(config, kSchemata).
CampaignResult RunCampaignSchemata(const CampaignConfig& config, int jobs = 1);

// Runs the traditional campaign: every mutant tree (and the original) is
// rebuilt before its tests run.
CampaignResult RunCampaignTraditional(const CampaignConfig& config, int jobs = 1);

std::filesystem::path ResultDir(const CampaignConfig& config, Strategy strategy);

}  // namespace minimut

#endif  // MINIMUT_EXECUTOR_CAMPAIGN_H_
