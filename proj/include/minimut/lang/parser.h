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

#ifndef MINIMUT_LANG_PARSER_H_
#define MINIMUT_LANG_PARSER_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "minimut/lang/ast.h"

namespace minimut {

struct SourceModule {
  std::string path;  // relative to the project root
  std::string text;
};

struct LineColumn {
  int line = 1;    // 1-based
  int column = 1;  // 1-based, in bytes
};

LineColumn LocateOffset(std::string_view text, std::size_t offset);

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::string path, LineColumn where, std::string found,
              std::vector<std::string> expected);

  const std::string& path() const { return path_; }
  LineColumn where() const { return where_; }
  const std::string& found() const { return found_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::string path_;
  LineColumn where_;
  std::string found_;
  std::vector<std::string> expected_;
};

// Parses a Mini-App module. The returned tree is numbered in preorder and
// every node's span covers its full token extent.
Ast Parse(const SourceModule& module);

// Canonical pretty-printed form: one statement per line, two-space indent.
std::string Unparse(const Ast& ast);
std::string Unparse(const Node& node);

// Single-line rendering of an expression, or of a statement without its
// trailing newline. Used for MutationInfo original/replacement text.
std::string UnparseInline(const Node& node);

}  // namespace minimut

#endif  // MINIMUT_LANG_PARSER_H_
