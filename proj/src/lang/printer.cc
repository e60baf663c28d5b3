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

#include <string>

#include "minimut/lang/parser.h"

namespace minimut {
namespace {

int Precedence(const Node& expr) {
  if (expr.kind == NodeKind::kBinary) {
    const std::string& op = expr.text;
    if (op == "||") return 1;
    if (op == "&&") return 2;
    if (op == "==" || op == "!=") return 3;
    if (op == "<" || op == "<=" || op == ">" || op == ">=") return 4;
    if (op == "+" || op == "-") return 5;
    return 6;
  }
  if (expr.kind == NodeKind::kUnary) return 7;
  return 8;
}

std::string Quote(const std::string& value) {
  std::string out = "\"";
  for (char c : value) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

class Printer {
 public:
  std::string Take() { return std::move(out_); }

  void Expr(const Node& e) {
    switch (e.kind) {
      case NodeKind::kInt:
      case NodeKind::kBool:
      case NodeKind::kIdent:
        out_ += e.text;
        break;
      case NodeKind::kNull:
        out_ += "null";
        break;
      case NodeKind::kString:
        out_ += Quote(e.text);
        break;
      case NodeKind::kCall:
        out_ += e.text;
        out_ += '(';
        for (std::size_t i = 0; i < e.children.size(); ++i) {
          if (i > 0) out_ += ", ";
          Expr(e.children[i]);
        }
        out_ += ')';
        break;
      case NodeKind::kUnary:
        out_ += e.text;
        Operand(e.children[0], Precedence(e));
        break;
      case NodeKind::kBinary: {
        const int p = Precedence(e);
        Operand(e.children[0], p);
        out_ += ' ';
        out_ += e.text;
        out_ += ' ';
        // Left-associative: an equal-precedence right operand needs parens.
        Operand(e.children[1], p + 1);
        break;
      }
      default:
        out_ += "<";
        out_ += NodeKindName(e.kind);
        out_ += ">";
    }
  }

  void Statement(const Node& s, int depth) {
    Indent(depth);
    switch (s.kind) {
      case NodeKind::kVarDecl:
        out_ += "var " + s.text;
        if (!s.children.empty()) {
          out_ += " = ";
          Expr(s.children[0]);
        }
        out_ += ";\n";
        break;
      case NodeKind::kAssign:
        out_ += s.text + " = ";
        Expr(s.children[0]);
        out_ += ";\n";
        break;
      case NodeKind::kExprStmt:
        Expr(s.children[0]);
        out_ += ";\n";
        break;
      case NodeKind::kReturn:
        out_ += "return";
        if (!s.children.empty()) {
          out_ += ' ';
          Expr(s.children[0]);
        }
        out_ += ";\n";
        break;
      case NodeKind::kIf:
        out_ += "if (";
        Expr(s.children[0]);
        out_ += ") ";
        Block(s.children[1], depth);
        if (s.children.size() > 2) {
          out_ += " else ";
          Block(s.children[2], depth);
        }
        out_ += '\n';
        break;
      case NodeKind::kWhile:
        out_ += "while (";
        Expr(s.children[0]);
        out_ += ") ";
        Block(s.children[1], depth);
        out_ += '\n';
        break;
      case NodeKind::kDispatch:
        out_ += "dispatch (" + s.text + ") {\n";
        for (const Node& arm : s.children) {
          if (arm.kind == NodeKind::kCase) {
            if (!arm.label.empty()) {
              Indent(depth + 1);
              out_ += "// " + arm.label + "\n";
            }
            Indent(depth + 1);
            out_ += "case " + arm.text + " ";
          } else {
            Indent(depth + 1);
            out_ += "default ";
          }
          Block(arm.children[0], depth + 1);
          out_ += '\n';
        }
        Indent(depth);
        out_ += "}\n";
        break;
      default:
        out_ += "<";
        out_ += NodeKindName(s.kind);
        out_ += ">\n";
    }
  }

  // Emits "{ ... }" without a trailing newline; the caller is already
  // positioned after the indent.
  void Block(const Node& block, int depth) {
    if (block.children.empty()) {
      out_ += "{ }";
      return;
    }
    out_ += "{\n";
    for (const Node& s : block.children) Statement(s, depth + 1);
    Indent(depth);
    out_ += '}';
  }

  void Function(const Node& fn) {
    out_ += "fn " + fn.text + "(";
    for (std::size_t i = 0; i + 1 < fn.children.size(); ++i) {
      if (i > 0) out_ += ", ";
      out_ += fn.children[i].text;
    }
    out_ += ") ";
    Block(FunctionBody(fn), 0);
    out_ += '\n';
  }

  void Program(const Node& program) {
    for (std::size_t i = 0; i < program.children.size(); ++i) {
      if (i > 0) out_ += '\n';
      Function(program.children[i]);
    }
  }

 private:
  void Indent(int depth) { out_.append(static_cast<std::size_t>(depth) * 2, ' '); }

  void Operand(const Node& e, int min_precedence) {
    if (Precedence(e) < min_precedence) {
      out_ += '(';
      Expr(e);
      out_ += ')';
    } else {
      Expr(e);
    }
  }

  std::string out_;
};

}  // namespace

std::string Unparse(const Node& node) {
  Printer printer;
  if (node.kind == NodeKind::kProgram) {
    printer.Program(node);
  } else if (node.kind == NodeKind::kFnDecl) {
    printer.Function(node);
  } else if (node.kind == NodeKind::kBlock) {
    printer.Block(node, 0);
  } else if (IsStatement(node.kind)) {
    printer.Statement(node, 0);
  } else {
    printer.Expr(node);
  }
  return printer.Take();
}

std::string Unparse(const Ast& ast) { return Unparse(ast.root); }

std::string UnparseInline(const Node& node) {
  std::string text = Unparse(node);
  while (!text.empty() && text.back() == '\n') text.pop_back();
  return text;
}

}  // namespace minimut
