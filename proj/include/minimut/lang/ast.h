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

#ifndef MINIMUT_LANG_AST_H_
#define MINIMUT_LANG_AST_H_

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace minimut {

enum class NodeKind {
  kProgram,
  kFnDecl,
  kParam,
  kBlock,
  kVarDecl,
  kAssign,
  kIf,
  kWhile,
  kReturn,
  kExprStmt,
  kDispatch,
  kCase,
  kDefault,
  kBinary,
  kUnary,
  kCall,
  kInt,
  kString,
  kBool,
  kNull,
  kIdent,
};

std::string_view NodeKindName(NodeKind kind);

bool IsStatement(NodeKind kind);
bool IsExpression(NodeKind kind);

// Byte offsets into the module text, half open.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

// A syntax tree node. Trees are plain values: copying a Node copies the
// whole subtree.
//
// Layout by kind (children in order):
//   Program   fnDecl*
//   FnDecl    text=name; Param* Block
//   Param     text=name
//   Block     stmt*
//   VarDecl   text=name; [init]
//   Assign    text=name; expr
//   If        cond Block [Block]
//   While     cond Block
//   Return    [expr]
//   ExprStmt  expr
//   Dispatch  text=selector; Case* Default
//   Case      text=decimal muid, label=arm comment; Block
//   Default   Block
//   Binary    text=op; lhs rhs
//   Unary     text=op; operand
//   Call      text=callee; arg*
//   Int       text=digits
//   String    text=decoded value
//   Bool      text=true|false
//   Null
//   Ident     text=name
struct Node {
  NodeKind kind = NodeKind::kProgram;
  std::string text;
  std::string label;
  std::vector<Node> children;
  Span span;
  int id = -1;

  Node() = default;
  Node(NodeKind k, std::string t = {}, std::vector<Node> c = {})
      : kind(k), text(std::move(t)), children(std::move(c)) {}
};

// Parsed module. Node ids are the dense preorder index 0..node_count-1.
struct Ast {
  Node root;
  int node_count = 0;

  // Reassigns ids in preorder. Call after structural edits.
  void Renumber();
};

// Equality ignoring spans and ids.
bool StructurallyEqual(const Node& a, const Node& b);
bool StructurallyEqual(const Ast& a, const Ast& b);

using NodePredicate = std::function<bool(const Node& node, const Node* parent)>;

// Ids of the nodes satisfying `predicate`, in preorder (strictly increasing).
std::vector<int> PreorderPoints(const Ast& ast, const NodePredicate& predicate);

// Preorder walk with parent pointers.
void Walk(const Node& root,
          const std::function<void(const Node&, const Node*)>& visit);

Node* FindById(Node& root, int id);
const Node* FindById(const Node& root, int id);

// Function declaration named `name`, or nullptr.
const Node* FindFunction(const Ast& ast, std::string_view name);

// Body block of a FnDecl.
const Node& FunctionBody(const Node& fn);
Node& FunctionBody(Node& fn);

// Node constructors used by the transforms.
Node MakeCall(std::string callee, std::vector<Node> args);
Node MakeString(std::string value);
Node MakeInt(long long value);
Node MakeBool(bool value);
Node MakeNull();
Node MakeIdent(std::string name);

}  // namespace minimut

#endif  // MINIMUT_LANG_AST_H_
