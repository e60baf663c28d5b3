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

#ifndef MINIMUT_LANG_PROJECT_H_
#define MINIMUT_LANG_PROJECT_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "minimut/lang/ast.h"
#include "minimut/lang/parser.h"

namespace minimut {

class IoError : public std::runtime_error {
 public:
  IoError(const std::filesystem::path& path, const std::string& what)
      : std::runtime_error(path.string() + ": " + what), path_(path) {}
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// A parsed Mini-App project. `modules` and `asts` are parallel; module order
// is the lexicographic order of relative paths.
struct Project {
  std::vector<SourceModule> modules;
  std::vector<Ast> asts;

  // Functions named test_*, module-major then declaration order.
  std::vector<std::string> EntryTests() const;

  int ModuleIndex(const std::string& path) const;
};

Project ParseProject(std::vector<SourceModule> modules);

// Reads every *.mini file under `dir` (recursively) and parses it.
Project LoadProject(const std::filesystem::path& dir);

std::vector<SourceModule> ReadModules(const std::filesystem::path& dir);

// Writes each module's text under `dir`, creating directories.
void WriteModules(const std::filesystem::path& dir,
                  const std::vector<SourceModule>& modules);

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, const std::string& text);

}  // namespace minimut

#endif  // MINIMUT_LANG_PROJECT_H_
