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

#include "minimut/operators/catalog.h"

#include <algorithm>
#include <span>

#include "minimut/lang/parser.h"

namespace minimut {

namespace {

struct CatalogEntry {
  OperatorKind kind;
  std::string_view acronym;
  std::string_view class_name;
};

constexpr std::array<CatalogEntry, 14> kCatalog = {{
    {OperatorKind::kBMA, "BMA", "BinaryArithmeticOperatorMutator"},
    {OperatorKind::kBGL, "BGL", "BuggyGUIListenerOperatorMutator"},
    {OperatorKind::kFVBIRN, "FVBIRN", "FindViewByIdReturnsNullOperatorMutator"},
    {OperatorKind::kIPLR, "IPLR", "IntentPayloadReplacementOperatorMutator"},
    {OperatorKind::kITR, "ITR", "IntentTargetReplacementOperatorMutator"},
    {OperatorKind::kIIFV, "IIFV", "InvalidIDFindViewOperatorMutator"},
    {OperatorKind::kIKI, "IKI", "InvalidKeyIntentOperatorMutator"},
    {OperatorKind::kIVF, "IVF", "InvalidViewFocusOperatorMutator"},
    {OperatorKind::kLGC, "LGC", "LengthyGUICreationOperatorMutator"},
    {OperatorKind::kLGL, "LGL", "LengthyGUIListenerOperatorMutator"},
    {OperatorKind::kNI, "NI", "NullIntentOperatorMutator"},
    {OperatorKind::kNVIPE, "NVIPE", "NullValueIntentPutExtraOperatorMutator"},
    {OperatorKind::kRAID, "RAID", "RandomActionIntentDefinitionOperatorMutator"},
    {OperatorKind::kVCNV, "VCNV", "ViewComponentNotVisibleOperatorMutator"},
}};

const CatalogEntry& Entry(OperatorKind kind) {
  return kCatalog[static_cast<std::size_t>(kind)];
}

bool IsCallTo(const Node& node, std::string_view callee, std::size_t argc) {
  return node.kind == NodeKind::kCall && node.text == callee &&
         node.children.size() == argc;
}

bool IsStringLiteral(const Node& node) { return node.kind == NodeKind::kString; }

// Whole right-hand side of an assignment or initializer.
bool IsRhs(const Node& node, const Node* parent) {
  return parent != nullptr &&
         (parent->kind == NodeKind::kAssign || parent->kind == NodeKind::kVarDecl) &&
         !parent->children.empty() && &parent->children[0] == &node;
}

// A call used as a statement: `f(...);` or `x = f(...);`.
bool IsStatementCall(const Node& node, const Node* parent) {
  return (parent != nullptr && parent->kind == NodeKind::kExprStmt) ||
         IsRhs(node, parent);
}

bool IsIntentConstructor(const Node& node) {
  return IsCallTo(node, "newIntent", 1) || IsCallTo(node, "newIntentTo", 1);
}

// Default payload of the same literal type, as IPLR substitutes it.
Node DefaultPayload(const Node& value) {
  switch (value.kind) {
    case NodeKind::kInt: return MakeInt(0);
    case NodeKind::kBool: return MakeBool(false);
    default: return MakeString("");
  }
}

std::vector<std::string> OtherTargets(const Node& call, const ProjectFacts& facts) {
  std::vector<std::string> targets;
  for (const std::string& t : facts.intent_targets) {
    if (t != call.children[0].text) targets.push_back(t);
  }
  return targets;
}

std::vector<std::string_view> OtherActions(const Node& call) {
  std::vector<std::string_view> actions;
  const bool has_action = IsCallTo(call, "newIntent", 1) &&
                          IsStringLiteral(call.children[0]);
  for (std::string_view a : kActionList) {
    if (!has_action || a != call.children[0].text) actions.push_back(a);
  }
  return actions;
}

Node WithArgument(const Node& call, std::size_t index, Node value) {
  Node copy = call;
  copy.children[index] = std::move(value);
  return copy;
}

Node SleepStatement(std::int64_t steps) {
  return Node(NodeKind::kExprStmt, "", {MakeCall("sleep", {MakeInt(steps)})});
}

std::string InlineStatements(const std::vector<Node>& statements) {
  std::string text;
  for (const Node& s : statements) {
    if (!text.empty()) text += ' ';
    text += UnparseInline(s);
  }
  return text;
}

Alteration ReplaceNode(const Node& original, Node replacement,
                       std::map<std::string, std::string> args = {}) {
  Alteration a;
  a.shape = AlterationShape::kReplaceNode;
  a.original_text = UnparseInline(original);
  a.replacement_text = UnparseInline(replacement);
  a.nodes.push_back(std::move(replacement));
  a.args = std::move(args);
  return a;
}

Alteration ReplaceStatement(const Node& statement, std::vector<Node> statements,
                            std::map<std::string, std::string> args) {
  Alteration a;
  a.shape = AlterationShape::kReplaceStatement;
  a.original_text = UnparseInline(statement);
  a.replacement_text = InlineStatements(statements);
  a.nodes = std::move(statements);
  a.args = std::move(args);
  return a;
}

}  // namespace

const std::vector<OperatorKind>& AllOperators() {
  static const std::vector<OperatorKind> kAll = [] {
    std::vector<OperatorKind> all;
    for (const CatalogEntry& e : kCatalog) all.push_back(e.kind);
    return all;
  }();
  return kAll;
}

std::string_view OperatorName(OperatorKind kind) { return Entry(kind).acronym; }

std::string_view OperatorClassName(OperatorKind kind) {
  return Entry(kind).class_name;
}

std::optional<OperatorKind> ParseOperatorName(std::string_view name) {
  for (const CatalogEntry& e : kCatalog) {
    if (e.acronym == name) return e.kind;
  }
  return std::nullopt;
}

ProjectFacts CollectFacts(const Project& project, std::int64_t delay_steps) {
  ProjectFacts facts;
  facts.delay_steps = delay_steps;
  for (const Ast& ast : project.asts) {
    Walk(ast.root, [&](const Node& node, const Node*) {
      if (IsCallTo(node, "newIntentTo", 1) && IsStringLiteral(node.children[0])) {
        facts.intent_targets.insert(node.children[0].text);
      }
      if (IsCallTo(node, "onClick", 2) && IsStringLiteral(node.children[1])) {
        facts.click_listeners.insert(node.children[1].text);
      }
    });
  }
  return facts;
}

bool IsEligible(OperatorKind kind, const Node& node, const Node* parent,
                const ProjectFacts& facts) {
  switch (kind) {
    case OperatorKind::kBMA: {
      if (node.kind != NodeKind::kBinary) return false;
      const std::string& op = node.text;
      return op == "+" || op == "-" || op == "*" || op == "/" || op == "%";
    }
    case OperatorKind::kBGL:
      return IsCallTo(node, "onClick", 2) && IsStringLiteral(node.children[1]) &&
             node.children[1].text != kNoopListener;
    case OperatorKind::kFVBIRN:
      return IsCallTo(node, "findViewById", 1) && IsRhs(node, parent);
    case OperatorKind::kIPLR: {
      if (!IsCallTo(node, "putExtra", 3)) return false;
      const Node& value = node.children[2];
      return value.kind != NodeKind::kNull &&
             !StructurallyEqual(value, DefaultPayload(value));
    }
    case OperatorKind::kITR:
      return IsCallTo(node, "newIntentTo", 1) &&
             IsStringLiteral(node.children[0]) &&
             facts.intent_targets.size() >= 2 &&
             !OtherTargets(node, facts).empty();
    case OperatorKind::kIIFV:
      return IsCallTo(node, "findViewById", 1) &&
             IsStringLiteral(node.children[0]) &&
             node.children[0].text != kInvalidId;
    case OperatorKind::kIKI:
      return IsCallTo(node, "getExtra", 2) && IsStringLiteral(node.children[1]) &&
             node.children[1].text != kInvalidKey;
    case OperatorKind::kIVF:
      return IsCallTo(node, "requestFocus", 1) && parent != nullptr &&
             parent->kind == NodeKind::kExprStmt;
    case OperatorKind::kLGC:
    case OperatorKind::kVCNV:
      return IsCallTo(node, "createWidget", 1) && IsStatementCall(node, parent);
    case OperatorKind::kLGL:
      return node.kind == NodeKind::kFnDecl &&
             facts.click_listeners.count(node.text) > 0;
    case OperatorKind::kNI:
    case OperatorKind::kRAID:
      return IsIntentConstructor(node) && IsRhs(node, parent);
    case OperatorKind::kNVIPE:
      return IsCallTo(node, "putExtra", 3) &&
             node.children[2].kind != NodeKind::kNull;
  }
  return false;
}

std::vector<Alteration> GenerateMutations(OperatorKind kind, const Node& node,
                                          const Node* parent,
                                          const ProjectFacts& facts,
                                          SeededStream& stream) {
  std::vector<Alteration> out;
  if (!IsEligible(kind, node, parent, facts)) return out;
  switch (kind) {
    case OperatorKind::kBMA:
      for (std::string_view op : {"+", "-", "*", "/", "%"}) {
        if (op == node.text) continue;
        Node replacement = node;
        replacement.text = std::string(op);
        out.push_back(ReplaceNode(node, std::move(replacement),
                                  {{"op", std::string(op)}}));
      }
      break;
    case OperatorKind::kBGL:
      out.push_back(ReplaceNode(
          node, WithArgument(node, 1, MakeString(std::string(kNoopListener))),
          {{"listener", node.children[1].text}}));
      break;
    case OperatorKind::kFVBIRN:
    case OperatorKind::kNI:
      out.push_back(ReplaceNode(node, MakeNull()));
      break;
    case OperatorKind::kIPLR: {
      Node payload = DefaultPayload(node.children[2]);
      const std::string text = UnparseInline(payload);
      out.push_back(ReplaceNode(node, WithArgument(node, 2, std::move(payload)),
                                {{"payload", text}}));
      break;
    }
    case OperatorKind::kITR: {
      const std::vector<std::string> targets = OtherTargets(node, facts);
      const std::string& target =
          stream.Draw(std::span<const std::string>(targets));
      out.push_back(ReplaceNode(node, WithArgument(node, 0, MakeString(target)),
                                {{"target", target}}));
      break;
    }
    case OperatorKind::kIIFV:
      out.push_back(ReplaceNode(
          node, WithArgument(node, 0, MakeString(std::string(kInvalidId))),
          {{"id", std::string(kInvalidId)}}));
      break;
    case OperatorKind::kIKI:
      out.push_back(ReplaceNode(
          node, WithArgument(node, 1, MakeString(std::string(kInvalidKey))),
          {{"key", std::string(kInvalidKey)}}));
      break;
    case OperatorKind::kIVF: {
      Node replacement = node;
      replacement.text = "clearFocus";
      out.push_back(ReplaceNode(node, std::move(replacement)));
      break;
    }
    case OperatorKind::kLGC:
      out.push_back(ReplaceStatement(
          *parent, {SleepStatement(facts.delay_steps), *parent},
          {{"delay", std::to_string(facts.delay_steps)}}));
      break;
    case OperatorKind::kVCNV: {
      Node widget = parent->kind == NodeKind::kExprStmt
                        ? MakeCall("findViewById", {node.children[0]})
                        : MakeIdent(parent->text);
      Node hide(NodeKind::kExprStmt, "",
                {MakeCall("setVisible", {std::move(widget), MakeBool(false)})});
      out.push_back(ReplaceStatement(*parent, {*parent, std::move(hide)}, {}));
      break;
    }
    case OperatorKind::kLGL: {
      Alteration a;
      a.shape = AlterationShape::kPrependToBody;
      a.nodes.push_back(SleepStatement(facts.delay_steps));
      a.original_text = "fn " + node.text;
      a.replacement_text = InlineStatements(a.nodes);
      a.args = {{"delay", std::to_string(facts.delay_steps)}};
      out.push_back(std::move(a));
      break;
    }
    case OperatorKind::kNVIPE:
      out.push_back(ReplaceNode(node, WithArgument(node, 2, MakeNull())));
      break;
    case OperatorKind::kRAID: {
      const std::vector<std::string_view> actions = OtherActions(node);
      const std::string action(
          stream.Draw(std::span<const std::string_view>(actions)));
      out.push_back(ReplaceNode(node, MakeCall("newIntent", {MakeString(action)}),
                                {{"action", action}}));
      break;
    }
  }
  return out;
}

}  // namespace minimut
