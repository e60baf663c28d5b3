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

#include "minimut/metrics/report.h"

#include <cstdio>

#include <nlohmann/json.hpp>

#include "minimut/lang/project.h"

namespace minimut {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr const char* kGenerationFile = "generation.json";

template <typename T>
ordered_json OrNa(const std::optional<T>& v) {
  if (!v) return "n/a";
  return *v;
}

ordered_json ScoreJson(const std::optional<Score>& s) {
  if (!s) return "n/a";
  return {{"generated", s->generated},
          {"alive", s->alive},
          {"dead", s->dead},
          {"percent", s->percent},
          {"text", FormatScore(*s)}};
}

ordered_json CarbonJson(const std::optional<CarbonEstimate>& e) {
  if (!e) return "n/a";
  const HardwareConfig& h = e->hardware;
  return {{"runtimeHours", e->runtime_hours},
          {"cores", h.cores},
          {"powerPerCoreW", h.power_per_core_w},
          {"usageFactor", h.usage_factor},
          {"memoryGB", h.memory_gb},
          {"powerPerGBW", h.power_per_gb_w},
          {"pue", h.pue},
          {"carbonIntensity", h.carbon_intensity},
          {"energyKWh", e->energy_kwh},
          {"carbonGCO2e", e->carbon_gco2e}};
}

ordered_json Status(const std::optional<int>& s) {
  if (!s) return nullptr;
  return *s;
}

std::string Text(const std::optional<double>& v, const char* format) {
  if (!v) return "n/a";
  char buf[64];
  std::snprintf(buf, sizeof buf, format, *v);
  return buf;
}

}  // namespace

GenerationTimes ReadGenerationTimes(const fs::path& output_dir) {
  GenerationTimes times;
  const fs::path path = output_dir / kGenerationFile;
  if (!fs::exists(path)) return times;
  try {
    const auto doc = nlohmann::json::parse(ReadFile(path));
    if (doc.contains("schemata")) times.schemata = doc.at("schemata").get<double>();
    if (doc.contains("traditional")) {
      times.traditional = doc.at("traditional").get<double>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ReportError(path.string() + ": " + e.what());
  }
  return times;
}

void RecordGenerationTime(const fs::path& output_dir, Strategy strategy,
                          double seconds) {
  GenerationTimes times = ReadGenerationTimes(output_dir);
  (strategy == Strategy::kSchemata ? times.schemata : times.traditional) = seconds;
  ordered_json doc = ordered_json::object();
  if (times.schemata) doc["schemata"] = *times.schemata;
  if (times.traditional) doc["traditional"] = *times.traditional;
  WriteFile(output_dir / kGenerationFile, doc.dump(2) + "\n");
}

std::optional<StrategyResult> LoadStrategyResult(const CampaignConfig& config,
                                                 Strategy strategy) {
  const fs::path dir = ResultDir(config, strategy);
  if (!fs::exists(dir / "killing-matrix.csv")) return std::nullopt;
  try {
    StrategyResult r;
    r.matrix = KillingMatrix::FromCsv(ReadFile(dir / "killing-matrix.csv"));
    r.time = TimeReport::FromCsv(ReadFile(dir / "time.csv"));
    r.time.Seconds();
    return r;
  } catch (const std::invalid_argument& e) {
    throw ReportError(dir.string() + ": " + e.what());
  } catch (const IoError& e) {
    throw ReportError(e.what());
  }
}

CampaignReport BuildReport(const CampaignConfig& config) {
  const auto sc = LoadStrategyResult(config, Strategy::kSchemata);
  const auto tr = LoadStrategyResult(config, Strategy::kTraditional);
  if (!sc && !tr) {
    throw ReportError("no campaign results under " + (config.output_dir / "results").string() +
                      " for policy " + std::string(PolicyName(config.policy)));
  }
  CampaignReport report;
  report.policy = config.policy;

  CostReport& cost = report.cost;
  const GenerationTimes gen = ReadGenerationTimes(config.output_dir);
  cost.gen_time_schemata = gen.schemata;
  cost.gen_time_traditional = gen.traditional;
  if (gen.schemata && gen.traditional) {
    cost.saving_time_percent = SavingPercent(*gen.schemata, *gen.traditional);
  }
  const DiskUsage disk = MeasureDisk(config.output_dir);
  cost.disk_schemata = disk.schemata;
  cost.disk_traditional = disk.traditional;
  cost.saving_space_percent = disk.saving_percent;

  auto score = [](const KillingMatrix& m) -> std::optional<Score> {
    try {
      return ComputeScore(m);
    } catch (const EmptyCampaign&) {
      return std::nullopt;
    }
  };
  if (sc) {
    cost.run_time_schemata = sc->time.Seconds();
    report.score_schemata = score(sc->matrix);
    report.carbon_schemata = EstimateCarbon(*cost.run_time_schemata / 3600.0, config.hardware);
  }
  if (tr) {
    cost.run_time_traditional = tr->time.Seconds();
    report.score_traditional = score(tr->matrix);
    report.carbon_traditional =
        EstimateCarbon(*cost.run_time_traditional / 3600.0, config.hardware);
  }
  if (sc && tr) {
    cost.run_saving_percent =
        SavingPercent(*cost.run_time_schemata, *cost.run_time_traditional);
    try {
      report.divergence = DiffStrategies(sc->matrix, tr->matrix);
    } catch (const ShapeMismatch&) {
      // Campaigns over different mutant sets have nothing to compare.
    }
    report.energy_difference_percent = PercentDifference(
        report.carbon_schemata->energy_kwh, report.carbon_traditional->energy_kwh);
    report.carbon_difference_percent = PercentDifference(
        report.carbon_schemata->carbon_gco2e, report.carbon_traditional->carbon_gco2e);
  }
  return report;
}

std::string ReportJson(const CampaignReport& r) {
  ordered_json doc;
  doc["policy"] = PolicyName(r.policy);
  const CostReport& c = r.cost;
  doc["cost"] = {{"genTimeSchemata", OrNa(c.gen_time_schemata)},
                 {"genTimeTraditional", OrNa(c.gen_time_traditional)},
                 {"savingTimePercent", OrNa(c.saving_time_percent)},
                 {"diskSchemata", OrNa(c.disk_schemata)},
                 {"diskTraditional", OrNa(c.disk_traditional)},
                 {"savingSpacePercent", OrNa(c.saving_space_percent)},
                 {"runTimeSchemata", OrNa(c.run_time_schemata)},
                 {"runTimeTraditional", OrNa(c.run_time_traditional)},
                 {"runSavingPercent", OrNa(c.run_saving_percent)}};
  doc["score"] = {{"schemata", ScoreJson(r.score_schemata)},
                  {"traditional", ScoreJson(r.score_traditional)}};
  if (r.divergence) {
    ordered_json cells = ordered_json::array();
    for (const DivergentCell& cell : r.divergence->cells) {
      cells.push_back({{"muid", cell.muid},
                       {"test", cell.test},
                       {"schemata", Status(cell.status_a)},
                       {"traditional", Status(cell.status_b)}});
    }
    doc["divergence"] = {{"difference", r.divergence->difference},
                         {"divergences", r.divergence->divergences},
                         {"divergentCells", cells}};
  } else {
    doc["divergence"] = "n/a";
  }
  doc["carbon"] = {{"schemata", CarbonJson(r.carbon_schemata)},
                   {"traditional", CarbonJson(r.carbon_traditional)},
                   {"energyDifferencePercent", OrNa(r.energy_difference_percent)},
                   {"carbonDifferencePercent", OrNa(r.carbon_difference_percent)}};
  return doc.dump(2) + "\n";
}

std::string ReportSummary(const CampaignReport& r) {
  const CostReport& c = r.cost;
  auto bytes = [](const std::optional<std::uintmax_t>& b) {
    return b ? std::to_string(*b) + " B" : std::string("n/a");
  };
  auto score = [](const std::optional<Score>& s) {
    return s ? FormatScore(*s) : std::string("n/a");
  };
  std::string out;
  out += "policy              " + std::string(PolicyName(r.policy)) + "\n";
  out += "                    schemata        traditional     saving\n";
  char line[256];
  std::snprintf(line, sizeof line, "generation time     %-15s %-15s %s\n",
                Text(c.gen_time_schemata, "%.3f s").c_str(),
                Text(c.gen_time_traditional, "%.3f s").c_str(),
                Text(c.saving_time_percent, "%.2f%%").c_str());
  out += line;
  std::snprintf(line, sizeof line, "disk                %-15s %-15s %s\n",
                bytes(c.disk_schemata).c_str(), bytes(c.disk_traditional).c_str(),
                Text(c.saving_space_percent, "%.2f%%").c_str());
  out += line;
  std::snprintf(line, sizeof line, "run time            %-15s %-15s %s\n",
                Text(c.run_time_schemata, "%.3f s").c_str(),
                Text(c.run_time_traditional, "%.3f s").c_str(),
                Text(c.run_saving_percent, "%.2f%%").c_str());
  out += line;
  std::snprintf(line, sizeof line, "score               %-15s %-15s\n",
                score(r.score_schemata).c_str(), score(r.score_traditional).c_str());
  out += line;
  auto carbon = [](const std::optional<CarbonEstimate>& e) {
    return Text(e ? std::optional<double>(e->carbon_gco2e) : std::nullopt, "%.4g g");
  };
  std::snprintf(line, sizeof line, "CO2e                %-15s %-15s %s\n",
                carbon(r.carbon_schemata).c_str(), carbon(r.carbon_traditional).c_str(),
                Text(r.carbon_difference_percent, "%+.2f%%").c_str());
  out += line;
  if (r.divergence) {
    out += "difference          " + std::to_string(r.divergence->difference) + "\n";
    out += "divergences         " + std::to_string(r.divergence->divergences) + "\n";
  } else {
    out += "divergences         n/a\n";
  }
  return out;
}

}  // namespace minimut
