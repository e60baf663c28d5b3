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

#include "minimut/executor/config.h"

#include <set>

#include <nlohmann/json.hpp>

#include "minimut/lang/project.h"

namespace minimut {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::string_view kKeys[] = {
    "projectDir", "operatorNameList", "seed",       "stride",
    "strategy",   "policy",           "stepBudget", "delaySteps",
    "excludeList", "outputDir",       "hwConfig"};

constexpr std::string_view kHardwareKeys[] = {
    "cores", "powerPerCoreW", "usageFactor", "memoryGB",
    "powerPerGBW", "pue", "carbonIntensity"};

template <std::size_t N>
void RejectUnknownKeys(const json& object, const std::string_view (&known)[N],
                       std::string_view where) {
  for (const auto& [key, value] : object.items()) {
    bool ok = false;
    for (std::string_view k : known) ok = ok || k == key;
    if (!ok) {
      throw ConfigError("unknown key \"" + key + "\" in " + std::string(where));
    }
  }
}

template <typename T>
T Get(const json& object, const char* key, T fallback) {
  if (!object.contains(key)) return fallback;
  try {
    return object.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("bad value for \"") + key + "\"");
  }
}

std::int64_t GetInt(const json& object, const char* key, std::int64_t fallback,
                    std::int64_t min) {
  if (object.contains(key) && !object.at(key).is_number_integer()) {
    throw ConfigError(std::string("\"") + key + "\" must be an integer");
  }
  const std::int64_t v = Get<std::int64_t>(object, key, fallback);
  if (v < min) {
    throw ConfigError(std::string("\"") + key + "\" must be at least " +
                      std::to_string(min));
  }
  return v;
}

double GetPositive(const json& object, const char* key, double fallback) {
  if (object.contains(key) && !object.at(key).is_number()) {
    throw ConfigError(std::string("\"hwConfig.") + key + "\" must be a number");
  }
  const double v = Get<double>(object, key, fallback);
  if (!(v > 0)) {
    throw ConfigError(std::string("\"hwConfig.") + key + "\" must be positive");
  }
  return v;
}

fs::path Resolve(const fs::path& base_dir, const std::string& path) {
  return fs::absolute(base_dir / path).lexically_normal();
}

}  // namespace

std::string_view StrategyName(Strategy strategy) {
  switch (strategy) {
    case Strategy::kSchemata: return "schemata";
    case Strategy::kTraditional: return "traditional";
    case Strategy::kBoth: return "both";
  }
  return "";
}

std::string_view PolicyName(Policy policy) {
  return policy == Policy::kFullFail ? "fullFail" : "fastFail";
}

std::optional<Strategy> ParseStrategy(std::string_view name) {
  for (Strategy s : {Strategy::kSchemata, Strategy::kTraditional, Strategy::kBoth}) {
    if (StrategyName(s) == name) return s;
  }
  return std::nullopt;
}

std::optional<Policy> ParsePolicy(std::string_view name) {
  for (Policy p : {Policy::kFullFail, Policy::kFastFail}) {
    if (PolicyName(p) == name) return p;
  }
  return std::nullopt;
}

GenerationOptions CampaignConfig::Generation() const {
  GenerationOptions options;
  options.operators = operators;
  options.seed = seed;
  options.stride = stride;
  options.delay_steps = delay_steps;
  options.exclude = exclude;
  return options;
}

CampaignConfig ParseConfig(std::string_view text, const fs::path& base_dir) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  RejectUnknownKeys(doc, kKeys, "config");

  CampaignConfig config;
  if (!doc.contains("projectDir")) throw ConfigError("missing \"projectDir\"");
  config.project_dir = Resolve(base_dir, Get<std::string>(doc, "projectDir", ""));
  config.output_dir = Resolve(base_dir, Get<std::string>(doc, "outputDir", "out"));
  // Generated trees are .mini files too; inside the project they would be
  // read back as source.
  const fs::path rel = config.output_dir.lexically_relative(config.project_dir);
  if (rel.empty() || *rel.begin() != "..") {
    throw ConfigError("\"outputDir\" must lie outside \"projectDir\"");
  }

  if (!doc.contains("operatorNameList")) {
    throw ConfigError("missing \"operatorNameList\"");
  }
  std::set<OperatorKind> seen;
  for (const std::string& name :
       Get<std::vector<std::string>>(doc, "operatorNameList", {})) {
    const auto kind = ParseOperatorName(name);
    if (!kind) throw ConfigError("unknown operator \"" + name + "\"");
    if (!seen.insert(*kind).second) {
      throw ConfigError("operator \"" + name + "\" listed twice");
    }
    config.operators.push_back(*kind);
  }

  config.seed = static_cast<std::uint64_t>(GetInt(doc, "seed", 42, 0));
  config.stride = GetInt(doc, "stride", kDefaultStride, 1);
  config.step_budget = GetInt(doc, "stepBudget", 10000, 1);
  config.delay_steps = GetInt(doc, "delaySteps", kDefaultDelaySteps, 0);

  const std::string strategy = Get<std::string>(doc, "strategy", "both");
  const auto parsed_strategy = ParseStrategy(strategy);
  if (!parsed_strategy) throw ConfigError("unknown strategy \"" + strategy + "\"");
  config.strategy = *parsed_strategy;
  const std::string policy = Get<std::string>(doc, "policy", "fullFail");
  const auto parsed_policy = ParsePolicy(policy);
  if (!parsed_policy) throw ConfigError("unknown policy \"" + policy + "\"");
  config.policy = *parsed_policy;

  config.exclude = Get<std::vector<std::string>>(doc, "excludeList", {});

  if (doc.contains("hwConfig")) {
    const json& hw = doc.at("hwConfig");
    if (!hw.is_object()) throw ConfigError("\"hwConfig\" must be an object");
    RejectUnknownKeys(hw, kHardwareKeys, "hwConfig");
    HardwareConfig& h = config.hardware;
    h.cores = GetPositive(hw, "cores", h.cores);
    h.power_per_core_w = GetPositive(hw, "powerPerCoreW", h.power_per_core_w);
    h.usage_factor = GetPositive(hw, "usageFactor", h.usage_factor);
    h.memory_gb = GetPositive(hw, "memoryGB", h.memory_gb);
    h.power_per_gb_w = GetPositive(hw, "powerPerGBW", h.power_per_gb_w);
    h.pue = GetPositive(hw, "pue", h.pue);
    h.carbon_intensity = GetPositive(hw, "carbonIntensity", h.carbon_intensity);
  }
  return config;
}

CampaignConfig LoadConfig(const fs::path& path) {
  std::string text;
  try {
    text = ReadFile(path);
  } catch (const IoError& e) {
    throw ConfigError(e.what());
  }
  return ParseConfig(text, fs::absolute(path).parent_path());
}

std::string ConfigJson(const CampaignConfig& config) {
  nlohmann::ordered_json doc;
  doc["projectDir"] = config.project_dir.string();
  std::vector<std::string> names;
  for (OperatorKind kind : config.operators) {
    names.emplace_back(OperatorName(kind));
  }
  doc["operatorNameList"] = names;
  doc["seed"] = config.seed;
  doc["stride"] = config.stride;
  doc["strategy"] = StrategyName(config.strategy);
  doc["policy"] = PolicyName(config.policy);
  doc["stepBudget"] = config.step_budget;
  doc["delaySteps"] = config.delay_steps;
  doc["excludeList"] = config.exclude;
  doc["outputDir"] = config.output_dir.string();
  const HardwareConfig& h = config.hardware;
  doc["hwConfig"] = {{"cores", h.cores},
                     {"powerPerCoreW", h.power_per_core_w},
                     {"usageFactor", h.usage_factor},
                     {"memoryGB", h.memory_gb},
                     {"powerPerGBW", h.power_per_gb_w},
                     {"pue", h.pue},
                     {"carbonIntensity", h.carbon_intensity}};
  return doc.dump(2) + "\n";
}

}  // namespace minimut
