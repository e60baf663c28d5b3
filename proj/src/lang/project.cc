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

#include "minimut/lang/project.h"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace minimut {

namespace fs = std::filesystem;

std::vector<std::string> Project::EntryTests() const {
  std::vector<std::string> tests;
  for (const Ast& ast : asts) {
    for (const Node& fn : ast.root.children) {
      if (fn.text.rfind("test_", 0) == 0) tests.push_back(fn.text);
    }
  }
  return tests;
}

int Project::ModuleIndex(const std::string& path) const {
  for (std::size_t i = 0; i < modules.size(); ++i) {
    if (modules[i].path == path) return static_cast<int>(i);
  }
  return -1;
}

Project ParseProject(std::vector<SourceModule> modules) {
  std::sort(modules.begin(), modules.end(),
            [](const SourceModule& a, const SourceModule& b) {
              return a.path < b.path;
            });
  Project project;
  for (const SourceModule& module : modules) {
    project.asts.push_back(Parse(module));
  }
  project.modules = std::move(modules);
  return project;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError(path, "read failed");
  return buffer.str();
}

void WriteFile(const fs::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  if (ec) throw IoError(path.parent_path(), ec.message());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path, "cannot open for writing");
  out << text;
  out.flush();
  if (!out) throw IoError(path, "write failed");
}

std::vector<SourceModule> ReadModules(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw IoError(dir, "not a directory");
  std::vector<SourceModule> modules;
  for (fs::recursive_directory_iterator it(dir, ec), end; it != end;
       it.increment(ec)) {
    if (ec) throw IoError(dir, ec.message());
    if (!it->is_regular_file() || it->path().extension() != ".mini") continue;
    SourceModule module;
    module.path = fs::relative(it->path(), dir).generic_string();
    module.text = ReadFile(it->path());
    modules.push_back(std::move(module));
  }
  if (ec) throw IoError(dir, ec.message());
  std::sort(modules.begin(), modules.end(),
            [](const SourceModule& a, const SourceModule& b) {
              return a.path < b.path;
            });
  return modules;
}

Project LoadProject(const fs::path& dir) {
  return ParseProject(ReadModules(dir));
}

void WriteModules(const fs::path& dir,
                  const std::vector<SourceModule>& modules) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError(dir, ec.message());
  for (const SourceModule& module : modules) {
    WriteFile(dir / module.path, module.text);
  }
}

}  // namespace minimut
