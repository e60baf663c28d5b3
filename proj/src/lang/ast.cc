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

#include "minimut/lang/ast.h"

#include <cassert>

namespace minimut {

std::string_view NodeKindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kProgram: return "Program";
    case NodeKind::kFnDecl: return "FnDecl";
    case NodeKind::kParam: return "Param";
    case NodeKind::kBlock: return "Block";
    case NodeKind::kVarDecl: return "VarDecl";
    case NodeKind::kAssign: return "Assign";
    case NodeKind::kIf: return "If";
    case NodeKind::kWhile: return "While";
    case NodeKind::kReturn: return "Return";
    case NodeKind::kExprStmt: return "ExprStmt";
    case NodeKind::kDispatch: return "Dispatch";
    case NodeKind::kCase: return "Case";
    case NodeKind::kDefault: return "Default";
    case NodeKind::kBinary: return "Binary";
    case NodeKind::kUnary: return "Unary";
    case NodeKind::kCall: return "Call";
    case NodeKind::kInt: return "Int";
    case NodeKind::kString: return "String";
    case NodeKind::kBool: return "Bool";
    case NodeKind::kNull: return "Null";
    case NodeKind::kIdent: return "Ident";
  }
  return "?";
}

bool IsStatement(NodeKind kind) {
  switch (kind) {
    case NodeKind::kVarDecl:
    case NodeKind::kAssign:
    case NodeKind::kIf:
    case NodeKind::kWhile:
    case NodeKind::kReturn:
    case NodeKind::kExprStmt:
    case NodeKind::kDispatch:
      return true;
    default:
      return false;
  }
}

bool IsExpression(NodeKind kind) {
  switch (kind) {
    case NodeKind::kBinary:
    case NodeKind::kUnary:
    case NodeKind::kCall:
    case NodeKind::kInt:
    case NodeKind::kString:
    case NodeKind::kBool:
    case NodeKind::kNull:
    case NodeKind::kIdent:
      return true;
    default:
      return false;
  }
}

namespace {

void Number(Node& node, int& next) {
  node.id = next++;
  for (Node& child : node.children) Number(child, next);
}

void WalkImpl(const Node& node, const Node* parent,
              const std::function<void(const Node&, const Node*)>& visit) {
  visit(node, parent);
  for (const Node& child : node.children) WalkImpl(child, &node, visit);
}

}  // namespace

void Ast::Renumber() {
  int next = 0;
  Number(root, next);
  node_count = next;
}

bool StructurallyEqual(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.text != b.text || a.label != b.label ||
      a.children.size() != b.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!StructurallyEqual(a.children[i], b.children[i])) return false;
  }
  return true;
}

bool StructurallyEqual(const Ast& a, const Ast& b) {
  return StructurallyEqual(a.root, b.root);
}

void Walk(const Node& root,
          const std::function<void(const Node&, const Node*)>& visit) {
  WalkImpl(root, nullptr, visit);
}

std::vector<int> PreorderPoints(const Ast& ast, const NodePredicate& predicate) {
  std::vector<int> ids;
  Walk(ast.root, [&](const Node& node, const Node* parent) {
    if (predicate(node, parent)) ids.push_back(node.id);
  });
  return ids;
}

const Node* FindById(const Node& root, int id) {
  if (root.id == id) return &root;
  // Preorder ids: the subtree containing `id` is the last child whose id is
  // not greater than it.
  const Node* candidate = nullptr;
  for (const Node& child : root.children) {
    if (child.id <= id) {
      candidate = &child;
    } else {
      break;
    }
  }
  return candidate == nullptr ? nullptr : FindById(*candidate, id);
}

Node* FindById(Node& root, int id) {
  return const_cast<Node*>(FindById(static_cast<const Node&>(root), id));
}

const Node* FindFunction(const Ast& ast, std::string_view name) {
  for (const Node& fn : ast.root.children) {
    if (fn.kind == NodeKind::kFnDecl && fn.text == name) return &fn;
  }
  return nullptr;
}

const Node& FunctionBody(const Node& fn) {
  assert(fn.kind == NodeKind::kFnDecl && !fn.children.empty());
  return fn.children.back();
}

Node& FunctionBody(Node& fn) {
  assert(fn.kind == NodeKind::kFnDecl && !fn.children.empty());
  return fn.children.back();
}

Node MakeCall(std::string callee, std::vector<Node> args) {
  return Node(NodeKind::kCall, std::move(callee), std::move(args));
}

Node MakeString(std::string value) {
  return Node(NodeKind::kString, std::move(value));
}

Node MakeInt(long long value) {
  if (value < 0) {
    return Node(NodeKind::kUnary, "-",
                {Node(NodeKind::kInt, std::to_string(-value))});
  }
  return Node(NodeKind::kInt, std::to_string(value));
}

Node MakeBool(bool value) {
  return Node(NodeKind::kBool, value ? "true" : "false");
}

Node MakeNull() { return Node(NodeKind::kNull); }

Node MakeIdent(std::string name) {
  return Node(NodeKind::kIdent, std::move(name));
}

}  // namespace minimut
