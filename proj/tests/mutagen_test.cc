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

#include <set>
#include <string>
#include <vector>

#include "corpus_support.h"
#include "gtest/gtest.h"
#include "minimut/lang/parser.h"
#include "minimut/lang/project.h"
#include "minimut/mutagen/iterator.h"
#include "minimut/mutagen/mutation.h"
#include "minimut/operators/catalog.h"

namespace minimut {
namespace {

using testing::CorpusApps;
using testing::CorpusOptions;
using testing::CorpusProject;

TEST(AssignMuidTest, FigureAnchors) {
  EXPECT_EQ(27, AssignMuid(0, 27, 1000));
  EXPECT_EQ(1027, AssignMuid(1, 27, 1000));
  EXPECT_EQ(2027, AssignMuid(2, 27, 1000));
  EXPECT_EQ(38173, AssignMuid(38, 173, 1000));
  EXPECT_EQ(0, AssignMuid(0, 0, 1000));
}

TEST(AssignMuidTest, OverflowIsLoud) {
  EXPECT_EQ(999, AssignMuid(0, 999, 1000));
  try {
    AssignMuid(0, 1000, 1000);
    FAIL() << "expected PointOverflow";
  } catch (const PointOverflow& e) {
    EXPECT_NE(std::string(e.what()).find("raise stride"), std::string::npos);
  }
  EXPECT_EQ(7 * 50 + 3, AssignMuid(7, 3, 50));
  EXPECT_THROW(AssignMuid(0, 50, 50), PointOverflow);
}

TEST(AssignMuidTest, DecomposeIsInverse) {
  for (std::int64_t k = 0; k < 40; ++k) {
    for (std::int64_t p = 0; p < 1000; p += 37) {
      const MuidParts parts = DecomposeMuid(AssignMuid(k, p));
      EXPECT_EQ(k, parts.ordinal);
      EXPECT_EQ(p, parts.point_index);
    }
  }
}

TEST(SeededStreamTest, SingleChoice) {
  SeededStream stream(42, "RAID");
  const std::vector<std::string> one = {"SEND"};
  EXPECT_EQ("SEND", stream.Draw(std::span<const std::string>(one)));
  EXPECT_EQ(1u, stream.cursor());
}

TEST(SeededStreamTest, DrawsArePureInSeedOperatorAndCursor) {
  SeededStream a(42, "RAID");
  SeededStream b(42, "RAID");
  SeededStream other_op(42, "ITR");
  std::vector<std::size_t> seq_a, seq_b, seq_op;
  for (int i = 0; i < 64; ++i) {
    seq_a.push_back(a.DrawIndex(5));
    seq_b.push_back(b.DrawIndex(5));
    seq_op.push_back(other_op.DrawIndex(5));
  }
  EXPECT_EQ(seq_a, seq_b);
  EXPECT_NE(seq_a, seq_op);
  // The n-th draw does not depend on how the stream got there.
  EXPECT_EQ(SeededStream::Value(42, "RAID", 10) % 5, seq_a[10]);
}

TEST(SeededStreamTest, EmptyChoices) {
  SeededStream stream(1, "ITR");
  const std::vector<std::string> none;
  EXPECT_THROW(stream.Draw(std::span<const std::string>(none)), EmptyChoices);
}

Project Single(const std::string& text) {
  return ParseProject({{"app.mini", text}});
}

GenerationOptions Only(std::vector<OperatorKind> ops) {
  GenerationOptions options;
  options.operators = std::move(ops);
  return options;
}

TEST(MutatorIteratorTest, ArithmeticMutateRestoreCycle) {
  Project project = Single("fn f() {\n  var a;\n  a = 1 + 2;\n}\n");
  const Ast before = project.asts[0];
  const std::string text_before = Unparse(project.asts[0]);
  const ProjectFacts facts = CollectFacts(project, kDefaultDelaySteps);
  const auto points = EnumeratePoints(project, Only({OperatorKind::kBMA}), facts);
  ASSERT_EQ(1u, points.size());

  SeededStream stream(42, "BMA");
  MutatorIterator it(OperatorKind::kBMA, project, facts, stream);
  it.AddPoint(points[0]);
  std::vector<std::string> replacements;
  while (it.HasMutations()) {
    const MutationRecord r = it.Mutate();
    EXPECT_EQ(r.point, it.GetMutationPoint());
    EXPECT_EQ("1 + 2", r.original_text);
    EXPECT_NE(r.original_text, r.replacement_text);
    EXPECT_EQ(r.replacement_text.empty(), false);
    // The tree really carries the mutation while applied.
    EXPECT_NE(Unparse(project.asts[0]).find("a = " + r.replacement_text + ";"),
              std::string::npos);
    replacements.push_back(r.replacement_text);
    it.Restore();
    EXPECT_TRUE(StructurallyEqual(before, project.asts[0]));
  }
  EXPECT_EQ((std::vector<std::string>{"1 - 2", "1 * 2", "1 / 2", "1 % 2"}),
            replacements);
  EXPECT_EQ(text_before, Unparse(project.asts[0]));
}

TEST(MutatorIteratorTest, NoApplicableMutation) {
  Project project = Single("fn f() { print(1 == 2); }");
  const ProjectFacts facts = CollectFacts(project, kDefaultDelaySteps);
  SeededStream stream(42, "BMA");
  MutatorIterator it(OperatorKind::kBMA, project, facts, stream);
  EXPECT_FALSE(it.HasMutations());
  // The `==` node is not an arithmetic point.
  const int eq_id = PreorderPoints(project.asts[0], [](const Node& n, const Node*) {
                      return n.kind == NodeKind::kBinary;
                    }).at(0);
  it.AddPoint({0, eq_id, 0});
  EXPECT_FALSE(it.HasMutations());
}

TEST(MutatorIteratorTest, ContractViolations) {
  Project project = Single("fn f() { var a; a = 1 + 2; }");
  const ProjectFacts facts = CollectFacts(project, kDefaultDelaySteps);
  const auto points = EnumeratePoints(project, Only({OperatorKind::kBMA}), facts);
  SeededStream stream(42, "BMA");
  MutatorIterator it(OperatorKind::kBMA, project, facts, stream);
  EXPECT_THROW(it.Mutate(), ContractViolation);
  EXPECT_THROW(it.Restore(), ContractViolation);
  EXPECT_THROW(it.GetMutationPoint(), ContractViolation);
  it.AddPoint(points[0]);
  it.Mutate();
  EXPECT_THROW(it.Mutate(), ContractViolation);
  EXPECT_THROW(it.AddPoint(points[0]), ContractViolation);
  it.Restore();
  EXPECT_THROW(it.Restore(), ContractViolation);
  while (it.HasMutations()) {
    it.Mutate();
    it.Restore();
  }
  EXPECT_THROW(it.Mutate(), ContractViolation);
}

TEST(MutatorIteratorTest, NullIntentAssignsNull) {
  Project project = Single(
      "fn on_job(w) {\n  var jobIntent;\n  jobIntent = newIntent(\"SEND\");\n"
      "  send(jobIntent);\n}\n");
  const ProjectFacts facts = CollectFacts(project, kDefaultDelaySteps);
  const auto points = EnumeratePoints(project, Only({OperatorKind::kNI}), facts);
  ASSERT_EQ(1u, points.size());
  SeededStream stream(42, "NI");
  MutatorIterator it(OperatorKind::kNI, project, facts, stream);
  it.AddPoint(points[0]);
  ASSERT_TRUE(it.HasMutations());
  const MutationRecord r = it.Mutate();
  EXPECT_NE(Unparse(project.asts[0]).find("jobIntent = null;"), std::string::npos);
  EXPECT_EQ("null", r.replacement_text);
  EXPECT_EQ("newIntent(\"SEND\")", r.original_text);
  EXPECT_EQ(3, r.line);
  EXPECT_EQ(15, r.column);
  EXPECT_EQ("app.mini", r.file);
  it.Restore();
  EXPECT_FALSE(it.HasMutations());
}

TEST(ForEachMutantTest, OrdinalsCountAcrossOperatorsInConfigOrder) {
  Project project = Single(
      "fn a(i) { }\nfn b(i) { }\n"
      "fn f() {\n  var i;\n  i = newIntentTo(\"a\");\n  send(i);\n"
      "  i = newIntentTo(\"b\");\n}\n");
  GenerationOptions options =
      Only({OperatorKind::kNI, OperatorKind::kITR, OperatorKind::kRAID});
  const auto records = ForEachMutant(project, options);
  // Each newIntentTo call is one point shared by all three operators.
  ASSERT_EQ(6u, records.size());
  EXPECT_EQ("NI", records[0].operator_name);
  EXPECT_EQ(0, records[0].muid);
  EXPECT_EQ("ITR", records[1].operator_name);
  EXPECT_EQ(1000, records[1].muid);
  EXPECT_EQ("\"b\"", records[1].replacement_text.substr(12, 3));
  EXPECT_EQ("RAID", records[2].operator_name);
  EXPECT_EQ(2000, records[2].muid);
  EXPECT_EQ(1, records[3].muid);
  EXPECT_EQ(1001, records[4].muid);
  EXPECT_EQ(2001, records[5].muid);
}

TEST(ForEachMutantTest, PointOverflowAborts) {
  std::string body;
  for (int i = 0; i < 12; ++i) body += "  print(" + std::to_string(i) + " + 1);\n";
  Project project = Single("fn f() {\n" + body + "}\n");
  GenerationOptions options = Only({OperatorKind::kBMA});
  options.stride = 10;
  EXPECT_THROW(ForEachMutant(project, options), PointOverflow);
  options.stride = 11;
  EXPECT_THROW(ForEachMutant(project, options), PointOverflow);
  options.stride = 12;
  EXPECT_EQ(48u, ForEachMutant(project, options).size());
}

TEST(CorpusMutantsTest, IdsAreUniqueAndFollowTheScheme) {
  std::size_t total = 0;
  for (const std::string& app : CorpusApps()) {
    Project project = CorpusProject(app);
    const GenerationOptions options = CorpusOptions(app);
    const ProjectFacts facts = CollectFacts(project, options.delay_steps);
    const auto points = EnumeratePoints(project, options, facts);
    const auto records = ForEachMutant(project, options);
    std::set<std::int64_t> muids;
    std::set<int> used_points;
    for (const MutationRecord& r : records) {
      EXPECT_NE(-1, r.muid);
      EXPECT_EQ(r.ordinal * 1000 + r.point.point_index, r.muid);
      EXPECT_TRUE(muids.insert(r.muid).second) << app << " muid " << r.muid;
      EXPECT_NE(r.original_text, r.replacement_text);
      EXPECT_NE(r.file, app + "_test.mini");
      used_points.insert(r.point.point_index);
    }
    // Every point yields a mutation and point indices are dense.
    EXPECT_EQ(points.size(), used_points.size()) << app;
    for (std::size_t p = 0; p < points.size(); ++p) {
      EXPECT_EQ(static_cast<int>(p), points[p].point_index);
    }
    total += records.size();
  }
  EXPECT_GE(total, 150u);
}

TEST(CorpusMutantsTest, GenerationIsDeterministic) {
  for (const std::string& app : CorpusApps()) {
    Project a = CorpusProject(app);
    Project b = CorpusProject(app);
    EXPECT_EQ(MutationInfoJson(ForEachMutant(a, CorpusOptions(app))),
              MutationInfoJson(ForEachMutant(b, CorpusOptions(app))));
  }
}

TEST(CorpusMutantsTest, SeedChangesRandomActions) {
  bool differs = false;
  for (const std::string& app : CorpusApps()) {
    Project a = CorpusProject(app);
    Project b = CorpusProject(app);
    const auto r42 = ForEachMutant(a, CorpusOptions(app, 42));
    const auto r43 = ForEachMutant(b, CorpusOptions(app, 43));
    ASSERT_EQ(r42.size(), r43.size());
    for (std::size_t i = 0; i < r42.size(); ++i) {
      EXPECT_EQ(r42[i].muid, r43[i].muid);
      if (r42[i].operator_name == "RAID" && r42[i].args != r43[i].args) {
        differs = true;
      }
    }
  }
  EXPECT_TRUE(differs);
}

TEST(MutationInfoTest, KeyOrderAndRoundTrip) {
  MutationRecord r;
  r.muid = 1027;
  r.operator_name = "RAID";
  r.point.point_index = 27;
  r.ordinal = 1;
  r.original_text = "newIntentTo(\"x\")";
  r.replacement_text = "newIntent(\"SEND\")";
  r.args = {{"action", "SEND"}};
  r.file = "app/a.mini";
  r.line = 4;
  r.column = 7;
  const std::string json = MutationInfoJson({r});
  const std::vector<std::string> keys = {"muid", "operator", "file", "line",
                                         "column", "original", "replacement",
                                         "args"};
  std::size_t last = 0;
  for (const std::string& key : keys) {
    const std::size_t at = json.find("\"" + key + "\"");
    ASSERT_NE(std::string::npos, at) << key;
    EXPECT_GT(at, last) << key;
    last = at;
  }
  EXPECT_EQ('\n', json.back());
  EXPECT_EQ(std::string::npos, json.find('\r'));
  const auto parsed = ParseMutationInfo(json);
  ASSERT_EQ(1u, parsed.size());
  EXPECT_EQ(r, parsed[0]);
}

}  // namespace
}  // namespace minimut
