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

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <map>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "corpus_support.h"
#include "gtest/gtest.h"
#include "minimut/executor/campaign.h"
#include "minimut/executor/config.h"
#include "minimut/lang/project.h"
#include "minimut/mutagen/mutation.h"

namespace minimut {
namespace {

namespace fs = std::filesystem;
using testing::CorpusDir;
using testing::ScratchDir;

struct Invocation {
  int status = -1;
  std::string output;  // stdout and stderr
};

Invocation Cli(const std::string& args) {
  const std::string command = std::string(MINIMUT_CLI) + " " + args + " 2>&1";
  Invocation r;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

// A scratch campaign: project/ holds the sources, out/ the outputs.
class Campaign {
 public:
  explicit Campaign(const std::string& tag) : dir_(tag) {}

  void Source(const std::string& path, const std::string& text) {
    WriteFile(dir_.path() / "project" / path, text);
  }

  // Writes config.json; `extra` is spliced into the object.
  std::string Config(const std::string& operators, const std::string& extra = "") {
    const fs::path path = dir_.path() / "config.json";
    WriteFile(path, R"({"projectDir": "project", "outputDir": "out",
                       "excludeList": ["app_test.mini"],
                       "operatorNameList": )" +
                        operators + extra + "}");
    return "--config " + path.string();
  }

  // Points at an app of the bundled corpus.
  std::string CorpusConfig(const std::string& app) {
    const CampaignConfig base = LoadConfig(CorpusDir(app) / "config.json");
    nlohmann::json doc = nlohmann::json::parse(ConfigJson(base));
    doc["outputDir"] = (dir_.path() / "out").string();
    const fs::path path = dir_.path() / "config.json";
    WriteFile(path, doc.dump());
    return "--config " + path.string();
  }

  fs::path Out() const { return dir_.path() / "out"; }
  std::string Read(const std::string& rel) const { return ReadFile(Out() / rel); }

 private:
  ScratchDir dir_;
};

std::size_t Lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

TEST(CliTest, Usage) {
  EXPECT_EQ(1, Cli("").status);
  EXPECT_EQ(0, Cli("--help").status);
  EXPECT_EQ(1, Cli("explode").status);
  EXPECT_EQ(1, Cli("generate").status);
  EXPECT_EQ(1, Cli("generate --config /nonexistent.json").status);
}

TEST(CliTest, BadConfigValues) {
  Campaign c("cli-bad");
  c.Source("app.mini", "fn f() { return 1 + 2; }\n");
  const Invocation unknown = Cli("generate " + c.Config(R"(["BMA", "XYZ"])"));
  EXPECT_EQ(1, unknown.status);
  EXPECT_NE(unknown.output.find("XYZ"), std::string::npos);
  EXPECT_EQ(1, Cli("run " + c.Config(R"(["BMA"])") + " --policy slowFail").status);
  EXPECT_EQ(1, Cli("run " + c.Config(R"(["BMA"])") + " --jobs 0").status);
  EXPECT_EQ(1, Cli("run " + c.Config(R"(["BMA"])") + " --strategy all").status);
  EXPECT_EQ(1, Cli("generate " + c.Config(R"(["BMA"])", R"(, "color": "red")")).status);
  c.Source("broken.mini", "fn g( {\n");
  EXPECT_EQ(1, Cli("generate " + c.Config(R"(["BMA"])")).status);
}

TEST(CliTest, NoArithmeticMeansNoMutants) {
  Campaign c("cli-empty");
  c.Source("app.mini", "fn hello() { return \"hi\"; }\n");
  c.Source("app_test.mini", "fn test_hello() { assertEq(\"hi\", hello()); }\n");
  const std::string config = c.Config(R"(["BMA"])");
  const Invocation g = Cli("generate " + config);
  EXPECT_EQ(0, g.status) << g.output;
  EXPECT_NE(g.output.find("BinaryArithmeticOperatorMutator"), std::string::npos);
  EXPECT_EQ("[]\n", c.Read("schemata/MutationInfo.json"));
  const Invocation r = Cli("run " + config);
  EXPECT_EQ(0, r.status) << r.output;
  EXPECT_NE(r.output.find("score n/a"), std::string::npos) << r.output;
}

TEST(CliTest, OriginalSuiteRedExitsTwo) {
  Campaign c("cli-red");
  c.Source("app.mini", "fn two() { return 1 + 1; }\n");
  c.Source("app_test.mini", "fn test_two() { assertEq(3, two()); }\n");
  const Invocation r = Cli("run " + c.Config(R"(["BMA"])", R"(, "strategy": "schemata")"));
  EXPECT_EQ(2, r.status);
  EXPECT_NE(r.output.find("test_two"), std::string::npos);
  const KillingMatrix m = KillingMatrix::FromCsv(
      c.Read("results/schemata-fullFail/killing-matrix.csv"));
  EXPECT_EQ(std::vector<std::int64_t>{-1}, m.muids);
}

TEST(CliTest, PointOverflowExitsThree) {
  Campaign c("cli-overflow");
  c.Source("app.mini", "fn f(a) {\n  var x = a + 1;\n  var y = a * 2;\n  var z = a - 3;\n"
                       "  return x + y + z;\n}\n");
  const Invocation r = Cli("generate " + c.Config(R"(["BMA"])", R"(, "stride": 2)"));
  EXPECT_EQ(3, r.status) << r.output;
}

TEST(CliTest, GenerateBothIsIdempotent) {
  Campaign c("cli-generate");
  const std::string config = c.CorpusConfig("notes");
  const Invocation first = Cli("generate " + config);
  ASSERT_EQ(0, first.status) << first.output;
  EXPECT_NE(first.output.find("total"), std::string::npos);
  EXPECT_EQ(c.Read("schemata/MutationInfo.json"), c.Read("traditional/MutationInfo.json"));

  std::map<std::string, std::string> before;
  for (const auto& e : fs::recursive_directory_iterator(c.Out())) {
    if (e.is_regular_file() && e.path().filename() != "generation.json") {
      before[fs::relative(e.path(), c.Out()).string()] = ReadFile(e.path());
    }
  }
  ASSERT_EQ(0, Cli("generate " + config).status);
  std::map<std::string, std::string> after;
  for (const auto& e : fs::recursive_directory_iterator(c.Out())) {
    if (e.is_regular_file() && e.path().filename() != "generation.json") {
      after[fs::relative(e.path(), c.Out()).string()] = ReadFile(e.path());
    }
  }
  EXPECT_EQ(before, after);

  // The effective configuration re-validates to the same campaign.
  const CampaignConfig effective = LoadConfig(c.Out() / "effective-config.json");
  EXPECT_EQ(LoadConfig(fs::path(config.substr(9))), effective);
  EXPECT_EQ(c.Read("effective-config.json"), ConfigJson(effective));
}

TEST(CliTest, SeedOverride) {
  Campaign c("cli-seed");
  const std::string config = c.CorpusConfig("notes");
  ASSERT_EQ(0, Cli("generate " + config + " --strategy schemata --seed 43").status);
  EXPECT_EQ(43u, LoadConfig(c.Out() / "effective-config.json").seed);
  const std::string seeded = c.Read("schemata/MutationInfo.json");
  ASSERT_EQ(0, Cli("run " + config + " --strategy schemata").status);
  EXPECT_EQ(42u, LoadConfig(c.Out() / "effective-config.json").seed);
  EXPECT_NE(seeded, c.Read("schemata/MutationInfo.json"));
}

TEST(CliTest, RunPoliciesAndJobs) {
  Campaign c("cli-run");
  const std::string config = c.CorpusConfig("counter") + " --strategy schemata";
  const Invocation full = Cli("run " + config);
  ASSERT_EQ(0, full.status) << full.output;
  const std::size_t mutants =
      ParseMutationInfo(c.Read("schemata/MutationInfo.json")).size();
  const KillingMatrix m =
      KillingMatrix::FromCsv(c.Read("results/schemata-fullFail/killing-matrix.csv"));
  EXPECT_EQ(mutants + 1, m.muids.size());
  EXPECT_NE(full.output.find(FormatScore(ComputeScore(m))), std::string::npos);

  ASSERT_EQ(0, Cli("run " + config + " --policy fastFail --jobs 4").status);
  const KillingMatrix fast =
      KillingMatrix::FromCsv(c.Read("results/schemata-fastFail/killing-matrix.csv"));
  ASSERT_EQ(m.muids, fast.muids);
  for (std::size_t r = 0; r < m.muids.size(); ++r) {
    std::vector<int> statuses;
    for (const auto& cell : m.cells[r]) statuses.push_back(cell.value());
    EXPECT_EQ(ApplyPolicy(statuses, Policy::kFastFail), fast.cells[r]);
  }

  ASSERT_EQ(0, Cli("run " + config + " --jobs 3").status);
  EXPECT_EQ(m, KillingMatrix::FromCsv(
                   c.Read("results/schemata-fullFail/killing-matrix.csv")));
}

TEST(CliTest, ReportSections) {
  Campaign c("cli-report");
  const std::string config = c.CorpusConfig("share");
  EXPECT_EQ(4, Cli("report " + config).status);

  ASSERT_EQ(0, Cli("run " + config + " --strategy schemata").status);
  ASSERT_EQ(0, Cli("report " + config).status);
  auto doc = nlohmann::json::parse(c.Read("report.json"));
  EXPECT_EQ("n/a", doc["divergence"]);
  EXPECT_EQ("n/a", doc["cost"]["diskTraditional"]);

  const Invocation both = Cli("run " + config);
  ASSERT_EQ(0, both.status) << both.output;
  const Invocation report = Cli("report " + config);
  ASSERT_EQ(0, report.status);
  doc = nlohmann::json::parse(c.Read("report.json"));
  EXPECT_EQ(0, doc["divergence"]["divergences"]);
  EXPECT_GE(doc["cost"]["savingSpacePercent"].get<double>(), 95.0);
  EXPECT_TRUE(doc["cost"]["savingTimePercent"].is_number());
  EXPECT_NE(report.output.find("divergences         0"), std::string::npos);

  WriteFile(c.Out() / "results/traditional-fullFail/killing-matrix.csv", "mutant\nx\n");
  EXPECT_EQ(4, Cli("report " + config).status);
}

TEST(CliTest, Bench) {
  ScratchDir dir("cli-bench");
  const fs::path a = dir.path() / "a.csv";
  const fs::path b = dir.path() / "b.csv";
  ASSERT_EQ(0, Cli("bench --runs 1 --mutations 5 --output " + a.string()).status);
  ASSERT_EQ(0, Cli("bench --runs 2 --mutations 5 --output " + b.string()).status);
  auto keys = [](const std::string& csv) {
    std::vector<std::string> out;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
      const auto second = line.find(';', line.find(';') + 1);
      out.push_back(line.substr(0, second));
    }
    return out;
  };
  const std::string one = ReadFile(a);
  EXPECT_EQ(15u, Lines(one));
  EXPECT_EQ(keys(one), keys(ReadFile(b)));
  std::istringstream in(one);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ';')) f.push_back(field);
    ASSERT_EQ(7u, f.size());
    EXPECT_EQ(f[2], f[3]) << line;
    EXPECT_EQ(f[2], f[4]) << line;
    if (f[0] == "baseline") EXPECT_EQ("0.0", f[6]);
  }
  EXPECT_EQ(1, Cli("bench --runs 0").status);
}

TEST(CliTest, Diff) {
  ScratchDir dir("cli-diff");
  KillingMatrix m;
  m.tests = {"t1", "t2"};
  m.muids = {-1, 5};
  m.cells = {{0, 0}, {0, 1}};
  WriteFile(dir.path() / "a.csv", m.ToCsv());
  WriteFile(dir.path() / "b.csv", m.ToCsv());
  const std::string ab = (dir.path() / "a.csv").string() + " " +
                         (dir.path() / "b.csv").string();
  Invocation same = Cli("diff " + ab);
  EXPECT_EQ(0, same.status);
  EXPECT_NE(same.output.find("divergences 0"), std::string::npos);

  m.cells[1][1] = 0;
  WriteFile(dir.path() / "b.csv", m.ToCsv());
  Invocation flipped = Cli("diff " + ab);
  EXPECT_EQ(0, flipped.status);
  EXPECT_NE(flipped.output.find("5;t2;1;0"), std::string::npos) << flipped.output;
  EXPECT_NE(flipped.output.find("difference 1"), std::string::npos);
  EXPECT_NE(flipped.output.find("divergences 1"), std::string::npos);

  m.tests = {"t1", "t3"};
  WriteFile(dir.path() / "b.csv", m.ToCsv());
  EXPECT_EQ(1, Cli("diff " + ab).status);
  WriteFile(dir.path() / "b.csv", "nonsense;\n1\n");
  EXPECT_EQ(4, Cli("diff " + ab).status);
}

}  // namespace
}  // namespace minimut
