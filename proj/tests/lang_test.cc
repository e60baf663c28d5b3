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

#include <filesystem>
#include <random>
#include <regex>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "minimut/lang/ast.h"
#include "minimut/lang/parser.h"
#include "minimut/lang/project.h"

namespace minimut {
namespace {

namespace fs = std::filesystem;

Ast ParseText(const std::string& text) { return Parse({"test.mini", text}); }

std::vector<fs::path> CorpusFiles() {
  std::vector<fs::path> files;
  for (const auto& entry :
       fs::recursive_directory_iterator(MINIMUT_CORPUS_DIR)) {
    if (entry.path().extension() == ".mini") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

TEST(ParseTest, MinimalProgram) {
  Ast ast = ParseText("fn main() { }");
  ASSERT_EQ(1u, ast.root.children.size());
  const Node& fn = ast.root.children[0];
  EXPECT_EQ(NodeKind::kFnDecl, fn.kind);
  EXPECT_EQ("main", fn.text);
  ASSERT_EQ(1u, fn.children.size());
  EXPECT_EQ(NodeKind::kBlock, fn.children[0].kind);
  EXPECT_TRUE(fn.children[0].children.empty());
  EXPECT_EQ(3, ast.node_count);
}

TEST(ParseTest, DeclarationWithBinaryInitializer) {
  Ast ast = ParseText("fn main() { var a = 1 + 2; }");
  const Node& decl = FunctionBody(ast.root.children[0]).children[0];
  ASSERT_EQ(NodeKind::kVarDecl, decl.kind);
  EXPECT_EQ("a", decl.text);
  ASSERT_EQ(1u, decl.children.size());
  const Node& init = decl.children[0];
  EXPECT_EQ(NodeKind::kBinary, init.kind);
  EXPECT_EQ("+", init.text);
  EXPECT_EQ(NodeKind::kInt, init.children[0].kind);
  EXPECT_EQ("1", init.children[0].text);
  EXPECT_EQ("2", init.children[1].text);
}

TEST(ParseTest, MissingInitializerReportsSemicolon) {
  try {
    ParseText("fn main() {\n  var a = ;\n}");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(2, e.where().line);
    EXPECT_EQ(11, e.where().column);
    EXPECT_EQ("';'", e.found());
    ASSERT_EQ(1u, e.expected().size());
    EXPECT_EQ("expression", e.expected()[0]);
  }
}

TEST(ParseTest, OtherSyntaxErrors) {
  EXPECT_THROW(ParseText("fn main() { var = 1; }"), SyntaxError);
  EXPECT_THROW(ParseText("fn main() { print(\"x); }"), SyntaxError);
  EXPECT_THROW(ParseText("fn main() { x = 99999999999999999999; }"),
               SyntaxError);
  EXPECT_THROW(ParseText("fn main() {"), SyntaxError);
  EXPECT_THROW(ParseText("var a;"), SyntaxError);
  EXPECT_THROW(ParseText("fn main() { a @ b; }"), SyntaxError);
}

TEST(ParseTest, PrecedenceAndAssociativity) {
  Ast ast = ParseText("fn f() { return 1 - 2 - 3 * 4 < 5 && !x || y; }");
  const Node& ret = FunctionBody(ast.root.children[0]).children[0];
  EXPECT_EQ("return 1 - 2 - 3 * 4 < 5 && !x || y;", UnparseInline(ret));
  const Node& orr = ret.children[0];
  EXPECT_EQ("||", orr.text);
  EXPECT_EQ("&&", orr.children[0].text);
  const Node& sub = orr.children[0].children[0].children[0];
  EXPECT_EQ("-", sub.text);
  EXPECT_EQ("-", sub.children[0].text);  // (1 - 2) - (3 * 4)
  EXPECT_EQ("*", sub.children[1].text);
}

TEST(ParseTest, SpansCoverTokens) {
  const std::string text = "fn f(a) {\n  x = foo(a, \"s\") + 1;\n}\n";
  Ast ast = ParseText(text);
  const Node& assign = FunctionBody(ast.root.children[0]).children[0];
  EXPECT_EQ("x = foo(a, \"s\") + 1;",
            text.substr(assign.span.begin, assign.span.end - assign.span.begin));
  const Node& call = assign.children[0].children[0];
  EXPECT_EQ("foo(a, \"s\")",
            text.substr(call.span.begin, call.span.end - call.span.begin));
}

TEST(UnparseTest, MinimalProgramIsCanonical) {
  Ast ast = ParseText("fn   main ( )\n{\n}");
  EXPECT_EQ("fn main() { }\n", Unparse(ast));
  EXPECT_TRUE(StructurallyEqual(ast, ParseText(Unparse(ast))));
}

TEST(UnparseTest, CanonicalLayout) {
  Ast ast = ParseText(
      "fn f(a,b){var x;if(a){x=(a+b)*2;}else{x=-a;}while(x>0){x=x-1;}"
      "return x;} fn g(){print(\"q\\\"\\n\");}");
  EXPECT_EQ(
      "fn f(a, b) {\n"
      "  var x;\n"
      "  if (a) {\n"
      "    x = (a + b) * 2;\n"
      "  } else {\n"
      "    x = -a;\n"
      "  }\n"
      "  while (x > 0) {\n"
      "    x = x - 1;\n"
      "  }\n"
      "  return x;\n"
      "}\n"
      "\n"
      "fn g() {\n"
      "  print(\"q\\\"\\n\");\n"
      "}\n",
      Unparse(ast));
}

TEST(UnparseTest, DispatchWithLabelsRoundTrips) {
  const std::string text =
      "fn f() {\n"
      "  var i;\n"
      "  dispatch (MUID_STATIC) {\n"
      "    // 0_NI\n"
      "    case 27 {\n"
      "      i = null;\n"
      "    }\n"
      "    default {\n"
      "      i = newIntent(\"SEND\");\n"
      "    }\n"
      "  }\n"
      "}\n";
  Ast ast = ParseText(text);
  EXPECT_EQ(text, Unparse(ast));
  const Node& dispatch = FunctionBody(ast.root.children[0]).children[1];
  ASSERT_EQ(NodeKind::kDispatch, dispatch.kind);
  EXPECT_EQ("0_NI", dispatch.children[0].label);
  EXPECT_EQ("27", dispatch.children[0].text);
}

TEST(UnparseTest, CorpusRoundTrip) {
  const auto files = CorpusFiles();
  ASSERT_GE(files.size(), 3u);
  for (const fs::path& file : files) {
    SCOPED_TRACE(file.string());
    SourceModule module{file.filename().string(), ReadFile(file)};
    Ast first = Parse(module);
    std::string printed = Unparse(first);
    Ast second = Parse({module.path, printed});
    EXPECT_TRUE(StructurallyEqual(first, second));
    // Canonical text is a fixed point.
    EXPECT_EQ(printed, Unparse(second));
  }
}

TEST(AstTest, NodeIdsArePreorderAndStable) {
  for (const fs::path& file : CorpusFiles()) {
    SourceModule module{file.filename().string(), ReadFile(file)};
    Ast a = Parse(module);
    Ast b = Parse(module);
    std::vector<int> ids_a;
    std::vector<int> ids_b;
    Walk(a.root, [&](const Node& n, const Node* parent) {
      ids_a.push_back(n.id);
      if (parent != nullptr) {
        EXPECT_LE(parent->span.begin, n.span.begin);
        EXPECT_GE(parent->span.end, n.span.end);
      }
    });
    Walk(b.root, [&](const Node& n, const Node*) { ids_b.push_back(n.id); });
    ASSERT_EQ(static_cast<std::size_t>(a.node_count), ids_a.size());
    for (std::size_t i = 0; i < ids_a.size(); ++i) {
      EXPECT_EQ(static_cast<int>(i), ids_a[i]);
    }
    EXPECT_EQ(ids_a, ids_b);
    for (int id = 0; id < a.node_count; ++id) {
      const Node* found = FindById(a.root, id);
      ASSERT_NE(nullptr, found);
      EXPECT_EQ(id, found->id);
    }
  }
}

bool IsPlus(const Node& n, const Node*) {
  return n.kind == NodeKind::kBinary && n.text == "+";
}

TEST(PreorderPointsTest, EmptyBlockHasNoPoints) {
  Ast ast = ParseText("fn f() { }");
  EXPECT_TRUE(PreorderPoints(ast, IsPlus).empty());
  EXPECT_TRUE(
      PreorderPoints(ast, [](const Node& n, const Node*) {
        return IsStatement(n.kind);
      }).empty());
}

TEST(PreorderPointsTest, SourceOrder) {
  const std::string text = "fn f() { x = a + b; y = c - d; z = e + f; }";
  Ast ast = ParseText(text);
  std::vector<int> ids = PreorderPoints(ast, IsPlus);
  ASSERT_EQ(2u, ids.size());
  EXPECT_LT(ids[0], ids[1]);
  EXPECT_EQ("a + b", UnparseInline(*FindById(ast.root, ids[0])));
  EXPECT_EQ("e + f", UnparseInline(*FindById(ast.root, ids[1])));
  EXPECT_EQ(ids, PreorderPoints(ast, IsPlus));
}

TEST(PreorderPointsTest, IntentConstructorsMatchTextScan) {
  const fs::path notes = fs::path(MINIMUT_CORPUS_DIR) / "notes/app/notes.mini";
  Ast original = Parse({"notes.mini", ReadFile(notes)});
  const std::string printed = Unparse(original);
  Ast ast = Parse({"notes.mini", printed});
  auto is_intent = [](const Node& n, const Node*) {
    return n.kind == NodeKind::kCall &&
           (n.text == "newIntent" || n.text == "newIntentTo");
  };
  std::vector<int> ids = PreorderPoints(ast, is_intent);

  // Oracle: every textual occurrence of an intent constructor call.
  std::vector<std::size_t> offsets;
  const std::regex pattern(R"(\bnewIntent(To)?\()");
  for (auto it = std::sregex_iterator(printed.begin(), printed.end(), pattern);
       it != std::sregex_iterator(); ++it) {
    offsets.push_back(static_cast<std::size_t>(it->position()));
  }
  ASSERT_EQ(offsets.size(), ids.size());
  ASSERT_FALSE(ids.empty());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    EXPECT_EQ(offsets[i], FindById(ast.root, ids[i])->span.begin);
  }
}

// Random expression/statement trees survive unparse -> parse.
class TreeGenerator {
 public:
  explicit TreeGenerator(unsigned seed) : rng_(seed) {}

  Node Expr(int depth) {
    const int choice = Pick(depth <= 0 ? 5 : 8);
    switch (choice) {
      case 0: return MakeInt(Pick(1000));
      case 1: return MakeString(Pick(2) ? "a\"b\\n" : "plain text");
      case 2: return MakeBool(Pick(2) == 0);
      case 3: return MakeNull();
      case 4: return MakeIdent(Name());
      case 5: {
        static const char* kOps[] = {"+", "-", "*", "/", "%", "==", "!=", "<",
                                     "<=", ">", ">=", "&&", "||"};
        return Node(NodeKind::kBinary, kOps[Pick(13)],
                    {Expr(depth - 1), Expr(depth - 1)});
      }
      case 6:
        return Node(NodeKind::kUnary, Pick(2) ? "-" : "!", {Expr(depth - 1)});
      default: {
        std::vector<Node> args;
        for (int i = Pick(3); i > 0; --i) args.push_back(Expr(depth - 1));
        return MakeCall(Name(), std::move(args));
      }
    }
  }

  Node Block(int depth) {
    Node block(NodeKind::kBlock);
    for (int i = Pick(4); i > 0; --i) block.children.push_back(Stmt(depth));
    return block;
  }

  Node Stmt(int depth) {
    switch (Pick(depth <= 0 ? 4 : 7)) {
      case 0: {
        Node n(NodeKind::kVarDecl, Name());
        if (Pick(2)) n.children.push_back(Expr(3));
        return n;
      }
      case 1: return Node(NodeKind::kAssign, Name(), {Expr(3)});
      case 2: return Node(NodeKind::kExprStmt, "", {Expr(3)});
      case 3: {
        Node n(NodeKind::kReturn);
        if (Pick(2)) n.children.push_back(Expr(3));
        return n;
      }
      case 4: {
        Node n(NodeKind::kIf, "", {Expr(2), Block(depth - 1)});
        if (Pick(2)) n.children.push_back(Block(depth - 1));
        return n;
      }
      case 5: return Node(NodeKind::kWhile, "", {Expr(2), Block(depth - 1)});
      default: {
        Node n(NodeKind::kDispatch, "MUID_STATIC");
        for (int i = Pick(3); i > 0; --i) {
          Node arm(NodeKind::kCase, std::to_string(Pick(5000)),
                   {Block(depth - 1)});
          if (Pick(2)) arm.label = "0_BMA";
          n.children.push_back(std::move(arm));
        }
        n.children.push_back(Node(NodeKind::kDefault, "", {Block(depth - 1)}));
        return n;
      }
    }
  }

  Ast Program() {
    Ast ast;
    ast.root = Node(NodeKind::kProgram);
    for (int i = Pick(3) + 1; i > 0; --i) {
      Node fn(NodeKind::kFnDecl, Name());
      for (int p = Pick(3); p > 0; --p) fn.children.push_back(Node(NodeKind::kParam, Name()));
      fn.children.push_back(Block(3));
      ast.root.children.push_back(std::move(fn));
    }
    ast.Renumber();
    return ast;
  }

 private:
  int Pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  std::string Name() {
    static const char* kNames[] = {"a", "b", "count", "w", "intent", "x_1"};
    return kNames[Pick(6)];
  }

  std::mt19937 rng_;
};

TEST(UnparseTest, RandomTreesRoundTrip) {
  for (unsigned seed = 1; seed <= 300; ++seed) {
    TreeGenerator gen(seed);
    Ast ast = gen.Program();
    const std::string text = Unparse(ast);
    Ast reparsed;
    ASSERT_NO_THROW(reparsed = Parse({"gen.mini", text})) << text;
    EXPECT_TRUE(StructurallyEqual(ast, reparsed)) << "seed " << seed << "\n"
                                                  << text;
  }
}

TEST(ProjectTest, LoadsModulesInPathOrder) {
  Project project = LoadProject(fs::path(MINIMUT_CORPUS_DIR) / "counter");
  ASSERT_EQ(4u, project.modules.size());
  EXPECT_EQ("app/counter.mini", project.modules[0].path);
  EXPECT_EQ("app/stats.mini", project.modules[1].path);
  EXPECT_EQ("counter_test.mini", project.modules[2].path);
  EXPECT_EQ("lib/support.mini", project.modules[3].path);
  std::vector<std::string> tests = project.EntryTests();
  ASSERT_EQ(7u, tests.size());
  EXPECT_EQ("test_buttons", tests[0]);
  EXPECT_EQ(2, project.ModuleIndex("counter_test.mini"));
}

TEST(ProjectTest, MissingDirectoryIsIoError) {
  EXPECT_THROW(LoadProject("/nonexistent/minimut"), IoError);
}

}  // namespace
}  // namespace minimut
