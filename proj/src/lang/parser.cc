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

#include "minimut/lang/parser.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <set>
#include <sstream>

namespace minimut {

LineColumn LocateOffset(std::string_view text, std::size_t offset) {
  LineColumn lc;
  offset = std::min(offset, text.size());
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++lc.line;
      lc.column = 1;
    } else {
      ++lc.column;
    }
  }
  return lc;
}

namespace {

std::string FormatSyntaxError(const std::string& path, LineColumn where,
                              const std::string& found,
                              const std::vector<std::string>& expected) {
  std::ostringstream out;
  out << path << ":" << where.line << ":" << where.column
      << ": syntax error at " << found;
  if (!expected.empty()) {
    out << ", expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) out << (i + 1 == expected.size() ? " or " : ", ");
      out << expected[i];
    }
  }
  return out.str();
}

}  // namespace

SyntaxError::SyntaxError(std::string path, LineColumn where, std::string found,
                         std::vector<std::string> expected)
    : std::runtime_error(FormatSyntaxError(path, where, found, expected)),
      path_(std::move(path)),
      where_(where),
      found_(std::move(found)),
      expected_(std::move(expected)) {}

namespace {

enum class TokenKind { kIdent, kInt, kString, kKeyword, kPunct, kEnd };

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;  // decoded value for strings
  Span span;
  std::string comment;  // trailing text of the last `//` comment before it
};

const std::set<std::string, std::less<>> kKeywords = {
    "fn",     "var",  "if",    "else", "while",    "return",
    "true",   "false", "null", "dispatch", "case", "default"};

class Lexer {
 public:
  Lexer(const SourceModule& module) : module_(module), text_(module.text) {}

  std::vector<Token> Run() {
    std::vector<Token> tokens;
    while (true) {
      std::string comment = SkipTrivia();
      Token token = Next();
      token.comment = std::move(comment);
      const bool end = token.kind == TokenKind::kEnd;
      tokens.push_back(std::move(token));
      if (end) break;
    }
    return tokens;
  }

 private:
  [[noreturn]] void Fail(std::size_t at, std::string found,
                         std::vector<std::string> expected = {}) {
    throw SyntaxError(module_.path, LocateOffset(text_, at), std::move(found),
                      std::move(expected));
  }

  std::string SkipTrivia() {
    std::string comment;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        ++pos_;
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        std::size_t end = text_.find('\n', pos_);
        if (end == std::string_view::npos) end = text_.size();
        std::string_view body = text_.substr(pos_ + 2, end - pos_ - 2);
        while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
        while (!body.empty() && (body.back() == ' ' || body.back() == '\r')) {
          body.remove_suffix(1);
        }
        comment = std::string(body);
        pos_ = end;
      } else {
        break;
      }
    }
    return comment;
  }

  Token Next() {
    Token token;
    const std::size_t start = pos_;
    token.span.begin = start;
    if (pos_ >= text_.size()) {
      token.kind = TokenKind::kEnd;
      token.span.end = start;
      return token;
    }
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ++pos_;
      }
      token.text = std::string(text_.substr(start, pos_ - start));
      token.kind =
          kKeywords.count(token.text) ? TokenKind::kKeyword : TokenKind::kIdent;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      token.text = std::string(text_.substr(start, pos_ - start));
      long long value = 0;
      auto [ptr, ec] = std::from_chars(token.text.data(),
                                       token.text.data() + token.text.size(),
                                       value);
      if (ec != std::errc()) Fail(start, "integer literal out of range");
      token.kind = TokenKind::kInt;
    } else if (c == '"') {
      ++pos_;
      std::string value;
      while (true) {
        if (pos_ >= text_.size() || text_[pos_] == '\n') {
          Fail(start, "unterminated string literal");
        }
        const char d = text_[pos_++];
        if (d == '"') break;
        if (d == '\\') {
          if (pos_ >= text_.size()) Fail(start, "unterminated string literal");
          const char e = text_[pos_++];
          switch (e) {
            case 'n': value += '\n'; break;
            case 't': value += '\t'; break;
            case '"': value += '"'; break;
            case '\\': value += '\\'; break;
            default: Fail(pos_ - 2, std::string("escape '\\") + e + "'");
          }
        } else {
          value += d;
        }
      }
      token.text = std::move(value);
      token.kind = TokenKind::kString;
    } else {
      static constexpr std::string_view kTwoChar[] = {"==", "!=", "<=", ">=",
                                                      "&&", "||"};
      token.kind = TokenKind::kPunct;
      for (std::string_view op : kTwoChar) {
        if (text_.substr(pos_, 2) == op) {
          token.text = std::string(op);
          pos_ += 2;
          break;
        }
      }
      if (token.text.empty()) {
        static constexpr std::string_view kOneChar = "(){};,=+-*/%<>!";
        if (kOneChar.find(c) == std::string_view::npos) {
          Fail(start, std::string("unexpected character '") + c + "'");
        }
        token.text = std::string(1, c);
        ++pos_;
      }
    }
    token.span.end = pos_;
    return token;
  }

  const SourceModule& module_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

int BinaryPrecedence(std::string_view op) {
  if (op == "||") return 1;
  if (op == "&&") return 2;
  if (op == "==" || op == "!=") return 3;
  if (op == "<" || op == "<=" || op == ">" || op == ">=") return 4;
  if (op == "+" || op == "-") return 5;
  if (op == "*" || op == "/" || op == "%") return 6;
  return 0;
}

class Parser {
 public:
  Parser(const SourceModule& module, std::vector<Token> tokens)
      : module_(module), tokens_(std::move(tokens)) {}

  Ast ParseProgram() {
    Ast ast;
    ast.root = Node(NodeKind::kProgram);
    ast.root.span = {0, module_.text.size()};
    while (!AtEnd()) ast.root.children.push_back(ParseFnDecl());
    ast.Renumber();
    return ast;
  }

 private:
  const Token& Peek(std::size_t ahead = 0) const {
    return tokens_[std::min(index_ + ahead, tokens_.size() - 1)];
  }
  bool AtEnd() const { return Peek().kind == TokenKind::kEnd; }

  bool IsSymbol(std::string_view text, std::size_t ahead = 0) const {
    const Token& t = Peek(ahead);
    return (t.kind == TokenKind::kPunct || t.kind == TokenKind::kKeyword) &&
           t.text == text;
  }

  static std::string Describe(const Token& t) {
    switch (t.kind) {
      case TokenKind::kEnd: return "end of input";
      case TokenKind::kString: return "string literal";
      case TokenKind::kInt: return "integer '" + t.text + "'";
      case TokenKind::kIdent: return "identifier '" + t.text + "'";
      default: return "'" + t.text + "'";
    }
  }

  [[noreturn]] void Fail(std::vector<std::string> expected) {
    const Token& t = Peek();
    throw SyntaxError(module_.path, LocateOffset(module_.text, t.span.begin),
                      Describe(t), std::move(expected));
  }

  const Token& Expect(std::string_view text) {
    if (!IsSymbol(text)) Fail({"'" + std::string(text) + "'"});
    return tokens_[index_++];
  }

  const Token& ExpectIdent() {
    if (Peek().kind != TokenKind::kIdent) Fail({"identifier"});
    return tokens_[index_++];
  }

  std::size_t LastEnd() const { return tokens_[index_ - 1].span.end; }

  Node ParseFnDecl() {
    const std::size_t begin = Peek().span.begin;
    if (!IsSymbol("fn")) Fail({"'fn'"});
    ++index_;
    Node fn(NodeKind::kFnDecl, ExpectIdent().text);
    Expect("(");
    if (!IsSymbol(")")) {
      while (true) {
        const Token& name = ExpectIdent();
        Node param(NodeKind::kParam, name.text);
        param.span = name.span;
        fn.children.push_back(std::move(param));
        if (IsSymbol(",")) {
          ++index_;
          continue;
        }
        break;
      }
    }
    Expect(")");
    fn.children.push_back(ParseBlock());
    fn.span = {begin, LastEnd()};
    return fn;
  }

  Node ParseBlock() {
    const std::size_t begin = Peek().span.begin;
    Expect("{");
    Node block(NodeKind::kBlock);
    while (!IsSymbol("}")) {
      if (AtEnd()) Fail({"'}'", "statement"});
      block.children.push_back(ParseStatement());
    }
    ++index_;
    block.span = {begin, LastEnd()};
    return block;
  }

  Node ParseStatement() {
    const std::size_t begin = Peek().span.begin;
    Node stmt;
    if (IsSymbol("var")) {
      ++index_;
      stmt = Node(NodeKind::kVarDecl, ExpectIdent().text);
      if (IsSymbol("=")) {
        ++index_;
        stmt.children.push_back(ParseExpr());
      }
      Expect(";");
    } else if (IsSymbol("if")) {
      ++index_;
      stmt = Node(NodeKind::kIf);
      Expect("(");
      stmt.children.push_back(ParseExpr());
      Expect(")");
      stmt.children.push_back(ParseBlock());
      if (IsSymbol("else")) {
        ++index_;
        stmt.children.push_back(ParseBlock());
      }
    } else if (IsSymbol("while")) {
      ++index_;
      stmt = Node(NodeKind::kWhile);
      Expect("(");
      stmt.children.push_back(ParseExpr());
      Expect(")");
      stmt.children.push_back(ParseBlock());
    } else if (IsSymbol("return")) {
      ++index_;
      stmt = Node(NodeKind::kReturn);
      if (!IsSymbol(";")) stmt.children.push_back(ParseExpr());
      Expect(";");
    } else if (IsSymbol("dispatch")) {
      stmt = ParseDispatch();
    } else if (Peek().kind == TokenKind::kIdent && IsSymbol("=", 1)) {
      stmt = Node(NodeKind::kAssign, tokens_[index_].text);
      index_ += 2;
      stmt.children.push_back(ParseExpr());
      Expect(";");
    } else {
      stmt = Node(NodeKind::kExprStmt);
      stmt.children.push_back(ParseExpr(true));
      Expect(";");
    }
    stmt.span = {begin, LastEnd()};
    return stmt;
  }

  Node ParseDispatch() {
    ++index_;
    Expect("(");
    Node dispatch(NodeKind::kDispatch, ExpectIdent().text);
    Expect(")");
    Expect("{");
    while (IsSymbol("case")) {
      const Token& case_token = tokens_[index_++];
      Node arm(NodeKind::kCase);
      arm.label = case_token.comment;
      bool negative = false;
      if (IsSymbol("-")) {
        negative = true;
        ++index_;
      }
      if (Peek().kind != TokenKind::kInt) Fail({"integer"});
      arm.text = (negative ? "-" : "") + tokens_[index_++].text;
      arm.children.push_back(ParseBlock());
      arm.span = {case_token.span.begin, LastEnd()};
      dispatch.children.push_back(std::move(arm));
    }
    if (!IsSymbol("default")) Fail({"'case'", "'default'"});
    const Token& default_token = tokens_[index_++];
    Node fallback(NodeKind::kDefault);
    fallback.children.push_back(ParseBlock());
    fallback.span = {default_token.span.begin, LastEnd()};
    dispatch.children.push_back(std::move(fallback));
    Expect("}");
    return dispatch;
  }

  Node ParseExpr(bool statement_start = false) {
    return ParseBinary(1, statement_start);
  }

  Node ParseBinary(int min_precedence, bool statement_start) {
    Node lhs = ParseUnary(statement_start);
    while (true) {
      const Token& t = Peek();
      if (t.kind != TokenKind::kPunct) break;
      const int precedence = BinaryPrecedence(t.text);
      if (precedence == 0 || precedence < min_precedence) break;
      ++index_;
      Node rhs = ParseBinary(precedence + 1, false);
      Node bin(NodeKind::kBinary, t.text);
      bin.span = {lhs.span.begin, rhs.span.end};
      bin.children.push_back(std::move(lhs));
      bin.children.push_back(std::move(rhs));
      lhs = std::move(bin);
    }
    return lhs;
  }

  Node ParseUnary(bool statement_start) {
    if (IsSymbol("-") || IsSymbol("!")) {
      const Token& op = tokens_[index_++];
      Node operand = ParseUnary(false);
      Node un(NodeKind::kUnary, op.text);
      un.span = {op.span.begin, operand.span.end};
      un.children.push_back(std::move(operand));
      return un;
    }
    return ParsePrimary(statement_start);
  }

  Node ParsePrimary(bool statement_start) {
    const Token& t = Peek();
    Node node;
    switch (t.kind) {
      case TokenKind::kInt:
        node = Node(NodeKind::kInt, t.text);
        break;
      case TokenKind::kString:
        node = Node(NodeKind::kString, t.text);
        break;
      case TokenKind::kKeyword:
        if (t.text == "true" || t.text == "false") {
          node = Node(NodeKind::kBool, t.text);
        } else if (t.text == "null") {
          node = Node(NodeKind::kNull);
        } else {
          FailExpression(statement_start);
        }
        break;
      case TokenKind::kIdent:
        if (IsSymbol("(", 1)) return ParseCall();
        node = Node(NodeKind::kIdent, t.text);
        break;
      case TokenKind::kPunct:
        if (t.text == "(") {
          const std::size_t begin = t.span.begin;
          ++index_;
          Node inner = ParseExpr();
          Expect(")");
          // Parentheses only group; the span widens to include them.
          inner.span = {begin, LastEnd()};
          return inner;
        }
        FailExpression(statement_start);
      case TokenKind::kEnd:
        FailExpression(statement_start);
    }
    node.span = t.span;
    ++index_;
    return node;
  }

  [[noreturn]] void FailExpression(bool statement_start) {
    if (statement_start) {
      Fail({"statement"});
    }
    Fail({"expression"});
  }

  Node ParseCall() {
    const Token& name = tokens_[index_];
    index_ += 2;
    Node call(NodeKind::kCall, name.text);
    if (!IsSymbol(")")) {
      while (true) {
        call.children.push_back(ParseExpr());
        if (IsSymbol(",")) {
          ++index_;
          continue;
        }
        break;
      }
    }
    Expect(")");
    call.span = {name.span.begin, LastEnd()};
    return call;
  }

  const SourceModule& module_;
  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

}  // namespace

Ast Parse(const SourceModule& module) {
  Lexer lexer(module);
  Parser parser(module, lexer.Run());
  return parser.ParseProgram();
}

}  // namespace minimut
