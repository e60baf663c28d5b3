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

#include "minimut/executor/campaign.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

#include "minimut/lang/project.h"
#include "minimut/mutagen/mutation.h"
#include "minimut/runtime/environment.h"
#include "minimut/runtime/interpreter.h"
#include "minimut/strategies/strategies.h"

namespace minimut {

namespace fs = std::filesystem;

namespace {

std::vector<std::string> SplitLines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string> SplitFields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(';', start);
    fields.push_back(line.substr(start, end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return fields;
}

std::int64_t ParseInteger(const std::string& text, std::string_view what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw std::invalid_argument("bad " + std::string(what) + " \"" + text + "\"");
  }
  return v;
}

}  // namespace

std::string KillingMatrix::ToCsv() const {
  std::string out = "mutant";
  for (const std::string& t : tests) out += ";" + t;
  out += "\n";
  for (std::size_t r = 0; r < muids.size(); ++r) {
    out += std::to_string(muids[r]);
    for (const std::optional<int>& cell : cells[r]) {
      out += ";";
      if (cell) out += std::to_string(*cell);
    }
    out += "\n";
  }
  return out;
}

KillingMatrix KillingMatrix::FromCsv(std::string_view csv) {
  const std::vector<std::string> lines = SplitLines(csv);
  if (lines.empty()) throw std::invalid_argument("empty killing matrix");
  std::vector<std::string> header = SplitFields(lines[0]);
  if (header[0] != "mutant") {
    throw std::invalid_argument("killing matrix header must start with mutant");
  }
  KillingMatrix m;
  m.tests.assign(header.begin() + 1, header.end());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::vector<std::string> fields = SplitFields(lines[i]);
    if (fields.size() != header.size()) {
      throw std::invalid_argument("killing matrix row " + std::to_string(i) +
                                  " has the wrong number of cells");
    }
    m.muids.push_back(ParseInteger(fields[0], "mutant id"));
    std::vector<std::optional<int>> row;
    for (std::size_t c = 1; c < fields.size(); ++c) {
      if (fields[c].empty()) {
        row.push_back(std::nullopt);
      } else {
        row.push_back(static_cast<int>(ParseInteger(fields[c], "status")));
      }
    }
    m.cells.push_back(std::move(row));
  }
  return m;
}

std::string FormatTimestamp(TimePoint t) {
  const auto since_epoch = t.time_since_epoch();
  const auto secs = std::chrono::floor<std::chrono::seconds>(since_epoch);
  const auto nanos =
      std::chrono::duration_cast<std::chrono::nanoseconds>(since_epoch - secs);
  const std::time_t tt = static_cast<std::time_t>(secs.count());
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d %02d:%02d:%02d.%09lld+00:00",
                tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour,
                tm.tm_min, tm.tm_sec, static_cast<long long>(nanos.count()));
  return buf;
}

TimePoint ParseTimestamp(std::string_view text) {
  std::tm tm{};
  long long nanos = 0;
  char tail[8] = {};
  const std::string s(text);
  if (std::sscanf(s.c_str(), "%4d-%2d-%2d %2d:%2d:%2d.%9lld%6s", &tm.tm_year,
                  &tm.tm_mon, &tm.tm_mday, &tm.tm_hour, &tm.tm_min, &tm.tm_sec,
                  &nanos, tail) != 8 ||
      std::string_view(tail) != "+00:00" || s.size() != 35) {
    throw std::invalid_argument("bad timestamp \"" + s + "\"");
  }
  tm.tm_year -= 1900;
  tm.tm_mon -= 1;
  const std::time_t secs = timegm(&tm);
  return TimePoint(std::chrono::duration_cast<TimePoint::duration>(
      std::chrono::seconds(secs) + std::chrono::nanoseconds(nanos)));
}

void TimeReport::Mark(std::string label) {
  lines_.push_back({std::chrono::system_clock::now(), std::move(label)});
}

void TimeReport::Append(const TimeReport& other) {
  lines_.insert(lines_.end(), other.lines_.begin(), other.lines_.end());
}

std::size_t TimeReport::Count(std::string_view label_prefix) const {
  return static_cast<std::size_t>(
      std::count_if(lines_.begin(), lines_.end(), [&](const Line& line) {
        return std::string_view(line.label).substr(0, label_prefix.size()) ==
               label_prefix;
      }));
}

double TimeReport::Seconds() const {
  std::optional<TimePoint> start, end;
  for (const Line& line : lines_) {
    if (line.label == "START TIME") start = line.time;
    if (line.label == "END TIME") end = line.time;
  }
  if (!start || !end) throw std::invalid_argument("time report is incomplete");
  return std::chrono::duration<double>(*end - *start).count();
}

std::string TimeReport::ToCsv() const {
  std::string out;
  for (const Line& line : lines_) {
    out += FormatTimestamp(line.time) + ";" + line.label + "\n";
  }
  return out;
}

TimeReport TimeReport::FromCsv(std::string_view csv) {
  TimeReport report;
  for (const std::string& line : SplitLines(csv)) {
    const std::size_t sep = line.find(';');
    if (sep == std::string::npos) {
      throw std::invalid_argument("bad time report line \"" + line + "\"");
    }
    report.lines_.push_back(
        {ParseTimestamp(line.substr(0, sep)), line.substr(sep + 1)});
  }
  return report;
}

std::vector<std::optional<int>> ApplyPolicy(const std::vector<int>& statuses,
                                            Policy policy) {
  std::vector<std::optional<int>> row(statuses.begin(), statuses.end());
  if (policy == Policy::kFastFail) {
    auto first_kill = std::find_if(statuses.begin(), statuses.end(),
                                   [](int s) { return s != 0; });
    if (first_kill != statuses.end()) {
      const auto keep = first_kill - statuses.begin() + 1;
      std::fill(row.begin() + keep, row.end(), std::nullopt);
    }
  }
  return row;
}

Score ComputeScore(std::int64_t generated, std::int64_t dead) {
  if (generated <= 0) throw EmptyCampaign();
  Score s;
  s.generated = generated;
  s.dead = dead;
  s.alive = generated - dead;
  s.percent = std::round(1000.0 * static_cast<double>(dead) /
                         static_cast<double>(generated)) /
              10.0;
  return s;
}

Score ComputeScore(const KillingMatrix& matrix) {
  std::int64_t generated = 0;
  std::int64_t dead = 0;
  for (std::size_t r = 0; r < matrix.muids.size(); ++r) {
    if (matrix.muids[r] < 0) continue;
    ++generated;
    const auto& row = matrix.cells[r];
    if (std::any_of(row.begin(), row.end(),
                    [](const std::optional<int>& c) { return c && *c != 0; })) {
      ++dead;
    }
  }
  return ComputeScore(generated, dead);
}

std::string FormatScore(const Score& score) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%lld/%lld (%.1f%%)",
                static_cast<long long>(score.dead),
                static_cast<long long>(score.generated), score.percent);
  return buf;
}

namespace {

std::string Join(const std::vector<std::string>& items) {
  std::string out;
  for (const std::string& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

}  // namespace

OriginalSuiteRed::OriginalSuiteRed(std::vector<std::string> failing)
    : std::runtime_error("original program fails: " + Join(failing)),
      failing_(std::move(failing)) {}

fs::path ResultDir(const CampaignConfig& config, Strategy strategy) {
  return config.output_dir / "results" /
         (std::string(StrategyName(strategy)) + "-" +
          std::string(PolicyName(config.policy)));
}

namespace {

struct RowResult {
  std::vector<std::optional<int>> cells;
  TimeReport time;
  std::vector<std::string> restarts;
};

// Runs `tests` in order against `program` and writes their artifacts.
RowResult RunRow(const Program& program, std::int64_t muid,
                 const Environment& env, const std::vector<std::string>& tests,
                 const CampaignConfig& config, Policy policy,
                 const fs::path& result_dir) {
  RowResult row;
  const fs::path dir = result_dir / std::to_string(muid);
  std::vector<int> statuses;
  for (const std::string& test : tests) {
    const TestResult r = RunTest(program, test, env, config.step_budget);
    std::string log;
    for (const std::string& line : r.event_log) log += line + "\n";
    log += "STATUS " + std::to_string(r.outcome.status);
    if (!r.outcome.message.empty()) log += " " + r.outcome.message;
    log += "\n";
    WriteFile(dir / (test + ".out"), log);
    WriteFile(dir / (test + ".time"), std::to_string(r.outcome.steps_used) + "\n");
    statuses.push_back(r.outcome.status);
    if (r.outcome.status == static_cast<int>(TestStatus::kRuntimeError) ||
        r.outcome.status == static_cast<int>(TestStatus::kTimeout)) {
      row.restarts.push_back("mutant " + std::to_string(muid) + " test " + test +
                             " status " + std::to_string(r.outcome.status));
    }
    if (policy == Policy::kFastFail && r.outcome.status != 0) break;
  }
  // Only a fastFail stop leaves tests unrun; ApplyPolicy blanks them again.
  statuses.resize(tests.size(), 0);
  row.cells = ApplyPolicy(statuses, policy);
  return row;
}

// Runs `run(i)` for i in [0, n) on `jobs` workers.
template <typename Fn>
void ParallelFor(std::size_t n, int jobs, Fn run) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) run(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  const std::size_t count = std::min<std::size_t>(jobs, n);
  for (std::size_t w = 0; w < count; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          run(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<std::int64_t> MutantIds(const fs::path& info, std::int64_t stride) {
  std::vector<std::int64_t> muids;
  for (const MutationRecord& r : ParseMutationInfo(ReadFile(info), stride)) {
    muids.push_back(r.muid);
  }
  std::sort(muids.begin(), muids.end());
  return muids;
}

Program Build(const fs::path& tree) { return Program(LoadProject(tree)); }

void ResetResults(const fs::path& dir) {
  std::error_code ec;
  fs::remove_all(dir, ec);
  fs::create_directories(dir, ec);
  if (ec) throw IoError(dir, ec.message());
}

struct Campaign {
  const CampaignConfig& config;
  fs::path result_dir;
  CampaignResult result;

  void AddRow(std::int64_t muid, RowResult row) {
    result.matrix.muids.push_back(muid);
    result.matrix.cells.push_back(std::move(row.cells));
    result.time.Append(row.time);
    for (std::string& r : row.restarts) result.restart_log.push_back(std::move(r));
  }

  // Aborts, leaving only the original's row, unless every test passed.
  void CheckOriginal() {
    std::vector<std::string> failing;
    const auto& row = result.matrix.cells.front();
    for (std::size_t t = 0; t < row.size(); ++t) {
      if (!row[t] || *row[t] != 0) failing.push_back(result.matrix.tests[t]);
    }
    if (failing.empty()) return;
    Finish();
    throw OriginalSuiteRed(std::move(failing));
  }

  void Finish() {
    result.time.Mark("END TIME");
    result.result_dir = result_dir;
    WriteFile(result_dir / "killing-matrix.csv", result.matrix.ToCsv());
    WriteFile(result_dir / "time.csv", result.time.ToCsv());
    std::string restarts;
    for (const std::string& r : result.restart_log) restarts += r + "\n";
    WriteFile(result_dir / "restart.log", restarts);
  }
};

}  // namespace

CampaignResult RunCampaignSchemata(const CampaignConfig& config, int jobs) {
  const fs::path tree = config.output_dir / "schemata";
  if (!fs::exists(tree / "MutationInfo.json")) {
    GenerateSchemata(config.project_dir, config.Generation(), config.output_dir);
  }
  const std::vector<std::int64_t> muids =
      MutantIds(tree / "MutationInfo.json", config.stride);
  Campaign c{config, ResultDir(config, Strategy::kSchemata), {}};
  ResetResults(c.result_dir);

  c.result.time.Mark("START TIME");
  c.result.time.Mark("BEGIN BUILD");
  const Program program = Build(tree);
  c.result.time.Mark("END BUILD");
  const std::vector<std::string> tests = program.EntryTests();
  c.result.matrix.tests = tests;

  auto run = [&](std::int64_t muid, Policy policy) {
    RowResult row;
    row.time.Mark("BEGIN RUN MUTANT " + std::to_string(muid));
    RowResult ran = RunRow(program, muid, Environment::WithMuid(muid), tests,
                           config, policy, c.result_dir);
    row.cells = std::move(ran.cells);
    row.restarts = std::move(ran.restarts);
    row.time.Mark("END RUN MUTANT " + std::to_string(muid));
    return row;
  };

  c.AddRow(kOriginalMuid, run(kOriginalMuid, Policy::kFullFail));
  c.CheckOriginal();

  std::vector<RowResult> rows(muids.size());
  ParallelFor(muids.size(), jobs,
              [&](std::size_t i) { rows[i] = run(muids[i], config.policy); });
  for (std::size_t i = 0; i < muids.size(); ++i) c.AddRow(muids[i], std::move(rows[i]));
  c.Finish();
  return std::move(c.result);
}

CampaignResult RunCampaignTraditional(const CampaignConfig& config, int jobs) {
  const fs::path trees = config.output_dir / "traditional";
  const fs::path original = config.output_dir / "original";
  if (!fs::exists(trees / "MutationInfo.json") || !fs::exists(original)) {
    GenerateTraditional(config.project_dir, config.Generation(), config.output_dir);
  }
  const std::vector<std::int64_t> muids =
      MutantIds(trees / "MutationInfo.json", config.stride);
  Campaign c{config, ResultDir(config, Strategy::kTraditional), {}};
  ResetResults(c.result_dir);

  const std::vector<std::string> tests = LoadProject(original).EntryTests();
  c.result.matrix.tests = tests;
  c.result.time.Mark("START TIME");
  auto run = [&](std::int64_t muid, Policy policy) {
    const std::string id = std::to_string(muid);
    RowResult row;
    row.time.Mark("BEGIN RUN MUTANT " + id);
    row.time.Mark("BEGIN BUILD MUTANT " + id);
    const Program program = Build(muid < 0 ? original : trees / id);
    row.time.Mark("END BUILD MUTANT " + id);
    RowResult ran = RunRow(program, muid, Environment(), tests, config, policy,
                           c.result_dir);
    row.cells = std::move(ran.cells);
    row.restarts = std::move(ran.restarts);
    row.time.Mark("END RUN MUTANT " + id);
    return row;
  };

  c.AddRow(kOriginalMuid, run(kOriginalMuid, Policy::kFullFail));
  c.CheckOriginal();

  std::vector<RowResult> rows(muids.size());
  ParallelFor(muids.size(), jobs,
              [&](std::size_t i) { rows[i] = run(muids[i], config.policy); });
  for (std::size_t i = 0; i < muids.size(); ++i) c.AddRow(muids[i], std::move(rows[i]));
  c.Finish();
  return std::move(c.result);
}

}  // namespace minimut
