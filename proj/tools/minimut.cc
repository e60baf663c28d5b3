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

// minimut: generate, run and compare mutation campaigns.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "minimut/executor/campaign.h"
#include "minimut/executor/config.h"
#include "minimut/lang/parser.h"
#include "minimut/lang/project.h"
#include "minimut/metrics/bench.h"
#include "minimut/metrics/diff.h"
#include "minimut/metrics/report.h"
#include "minimut/mutagen/mutation.h"
#include "minimut/runtime/interpreter.h"
#include "minimut/strategies/strategies.h"

namespace fs = std::filesystem;
using namespace minimut;

namespace {

enum Exit {
  kOk = 0,
  kUsage = 1,
  kOriginalRed = 2,
  kOverflow = 3,
  kIo = 4,
};

struct Overrides {
  std::string config_path;
  std::string strategy;
  std::string policy;
  std::optional<std::uint64_t> seed;
  int jobs = 1;
};

CampaignConfig Load(const Overrides& o) {
  CampaignConfig config = LoadConfig(o.config_path);
  if (!o.strategy.empty()) {
    const auto s = ParseStrategy(o.strategy);
    if (!s) throw ConfigError("unknown strategy \"" + o.strategy + "\"");
    config.strategy = *s;
  }
  if (!o.policy.empty()) {
    const auto p = ParsePolicy(o.policy);
    if (!p) throw ConfigError("unknown policy \"" + o.policy + "\"");
    config.policy = *p;
  }
  if (o.seed) config.seed = *o.seed;
  if (o.jobs < 1) throw ConfigError("--jobs must be at least 1");
  return config;
}

std::vector<Strategy> Strategies(const CampaignConfig& config) {
  if (config.strategy == Strategy::kBoth) {
    return {Strategy::kSchemata, Strategy::kTraditional};
  }
  return {config.strategy};
}

fs::path InfoPath(const CampaignConfig& config, Strategy strategy) {
  return config.output_dir / StrategyName(strategy) / "MutationInfo.json";
}

bool SameGeneration(const CampaignConfig& a, const CampaignConfig& b) {
  return a.project_dir == b.project_dir && a.operators == b.operators &&
         a.seed == b.seed && a.stride == b.stride && a.delay_steps == b.delay_steps &&
         a.exclude == b.exclude;
}

// Whether any project source changed after `stamp` was written.
bool SourcesNewerThan(const fs::path& project_dir, const fs::path& stamp) {
  const auto generated = fs::last_write_time(stamp);
  for (const auto& entry : fs::recursive_directory_iterator(project_dir)) {
    if (entry.path().extension() == ".mini" && entry.last_write_time() > generated) {
      return true;
    }
  }
  return false;
}

// Whether `strategy`'s trees on disk came from this configuration and the
// current sources.
bool Generated(const CampaignConfig& config, Strategy strategy) {
  const fs::path effective = config.output_dir / "effective-config.json";
  if (!fs::exists(InfoPath(config, strategy)) || !fs::exists(effective)) return false;
  if (SourcesNewerThan(config.project_dir, InfoPath(config, strategy))) return false;
  if (strategy == Strategy::kTraditional && !fs::exists(config.output_dir / "original")) {
    return false;
  }
  try {
    return SameGeneration(config, ParseConfig(ReadFile(effective), config.output_dir));
  } catch (const ConfigError&) {
    return false;
  }
}

std::vector<MutationRecord> Generate(const CampaignConfig& config, Strategy strategy) {
  const GenerationResult r =
      strategy == Strategy::kSchemata
          ? GenerateSchemata(config.project_dir, config.Generation(), config.output_dir)
          : GenerateTraditional(config.project_dir, config.Generation(), config.output_dir);
  RecordGenerationTime(config.output_dir, strategy, r.seconds);
  std::printf("generated %zu %s mutants in %.3f s -> %s\n", r.records.size(),
              std::string(StrategyName(strategy)).c_str(), r.seconds,
              (config.output_dir / StrategyName(strategy)).string().c_str());
  return r.records;
}

void WriteEffectiveConfig(const CampaignConfig& config) {
  WriteFile(config.output_dir / "effective-config.json", ConfigJson(config));
}

void PrintCounts(const CampaignConfig& config, const std::vector<MutationRecord>& records) {
  std::map<std::string, int> counts;
  for (const MutationRecord& r : records) ++counts[r.operator_name];
  std::printf("%-8s %-48s %7s\n", "operator", "class", "mutants");
  for (OperatorKind kind : config.operators) {
    const std::string name(OperatorName(kind));
    std::printf("%-8s %-48s %7d\n", name.c_str(),
                std::string(OperatorClassName(kind)).c_str(), counts[name]);
  }
  std::printf("%-8s %-48s %7zu\n", "total", "", records.size());
}

int CmdGenerate(const Overrides& o) {
  const CampaignConfig config = Load(o);
  std::vector<MutationRecord> records;
  for (Strategy s : Strategies(config)) records = Generate(config, s);
  WriteEffectiveConfig(config);
  PrintCounts(config, records);
  return kOk;
}

int CmdRun(const Overrides& o) {
  const CampaignConfig config = Load(o);
  bool regenerated = false;
  for (Strategy s : Strategies(config)) {
    if (!Generated(config, s)) {
      Generate(config, s);
      regenerated = true;
    }
  }
  if (regenerated || !fs::exists(config.output_dir / "effective-config.json")) {
    WriteEffectiveConfig(config);
  }
  for (Strategy s : Strategies(config)) {
    const CampaignResult r = s == Strategy::kSchemata
                                 ? RunCampaignSchemata(config, o.jobs)
                                 : RunCampaignTraditional(config, o.jobs);
    std::string score = "n/a";
    try {
      score = FormatScore(ComputeScore(r.matrix));
    } catch (const EmptyCampaign&) {
    }
    std::printf("%-12s %-9s score %-18s %.3f s -> %s\n",
                std::string(StrategyName(s)).c_str(),
                std::string(PolicyName(config.policy)).c_str(), score.c_str(),
                r.time.Seconds(), r.result_dir.string().c_str());
  }
  return kOk;
}

int CmdReport(const Overrides& o) {
  const CampaignConfig config = Load(o);
  const CampaignReport report = BuildReport(config);
  WriteFile(config.output_dir / "report.json", ReportJson(report));
  std::cout << ReportSummary(report);
  return kOk;
}

int CmdBench(int runs, int mutations, const std::string& output) {
  BenchOptions options;
  options.runs = runs;
  options.mutations = mutations;
  if (runs < 1 || mutations < 1) throw ConfigError("--runs and --mutations must be positive");
  const std::string csv = BenchCsv(RunDispatchBench(options));
  WriteFile(output, csv);
  std::cout << csv;
  return kOk;
}

int CmdDiff(const std::string& a_path, const std::string& b_path) {
  KillingMatrix a, b;
  try {
    a = KillingMatrix::FromCsv(ReadFile(a_path));
    b = KillingMatrix::FromCsv(ReadFile(b_path));
  } catch (const std::invalid_argument& e) {
    throw ReportError(e.what());
  }
  const DivergenceReport d = DiffStrategies(a, b);
  auto cell = [](const std::optional<int>& s) { return s ? std::to_string(*s) : "-"; };
  for (const DivergentCell& c : d.cells) {
    std::printf("%lld;%s;%s;%s\n", static_cast<long long>(c.muid), c.test.c_str(),
                cell(c.status_a).c_str(), cell(c.status_b).c_str());
  }
  std::printf("difference %lld\ndivergences %lld\n", static_cast<long long>(d.difference),
              static_cast<long long>(d.divergences));
  return kOk;
}

int Fail(int code, const std::string& message) {
  std::cerr << "minimut: " << message << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mutation campaigns over Mini-App projects: schemata vs traditional."};
  app.require_subcommand(1);

  Overrides o;
  auto config_flags = [&o](CLI::App* cmd, bool campaign) {
    cmd->add_option("--config", o.config_path, "Path to config.json")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--strategy", o.strategy, "schemata, traditional or both");
    if (campaign) {
      cmd->add_option("--policy", o.policy, "fullFail or fastFail");
      cmd->add_option("--jobs", o.jobs, "Parallel mutant rows")->capture_default_str();
    }
    cmd->add_option("--seed", o.seed, "Override the generation seed");
  };
  CLI::App* generate = app.add_subcommand("generate", "Generate mutants");
  config_flags(generate, false);
  CLI::App* run = app.add_subcommand("run", "Run the configured campaign");
  config_flags(run, true);
  CLI::App* report = app.add_subcommand("report", "Write report.json and print a summary");
  config_flags(report, true);

  int runs = 30;
  int mutations = 100;
  std::string bench_output = "bench.csv";
  CLI::App* bench = app.add_subcommand("bench", "Dispatch micro-benchmark");
  bench->add_option("--runs", runs, "Timed runs per row")->capture_default_str();
  bench->add_option("--mutations", mutations, "Alternatives per statement")
      ->capture_default_str();
  bench->add_option("--output", bench_output, "CSV path")->capture_default_str();

  std::string diff_a, diff_b;
  CLI::App* diff = app.add_subcommand("diff", "Compare two killing matrices");
  diff->add_option("a", diff_a, "killing-matrix.csv")->required()->check(CLI::ExistingFile);
  diff->add_option("b", diff_b, "killing-matrix.csv")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) return CmdGenerate(o);
    if (*run) return CmdRun(o);
    if (*report) return CmdReport(o);
    if (*bench) return CmdBench(runs, mutations, bench_output);
    if (*diff) return CmdDiff(diff_a, diff_b);
  } catch (const ConfigError& e) {
    return Fail(kUsage, e.what());
  } catch (const SyntaxError& e) {
    return Fail(kUsage, e.what());
  } catch (const LoadError& e) {
    return Fail(kUsage, e.what());
  } catch (const ShapeMismatch& e) {
    return Fail(kUsage, e.what());
  } catch (const OriginalSuiteRed& e) {
    return Fail(kOriginalRed, e.what());
  } catch (const PointOverflow& e) {
    return Fail(kOverflow, e.what());
  } catch (const IoError& e) {
    return Fail(kIo, e.what());
  } catch (const ReportError& e) {
    return Fail(kIo, e.what());
  } catch (const fs::filesystem_error& e) {
    return Fail(kIo, e.what());
  }
  return kUsage;
}
