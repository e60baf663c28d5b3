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

#ifndef MINIMUT_RUNTIME_INTERPRETER_H_
#define MINIMUT_RUNTIME_INTERPRETER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "minimut/lang/project.h"
#include "minimut/runtime/environment.h"
#include "minimut/runtime/value.h"

namespace minimut {

// Test status codes written to the killing matrix.
enum class TestStatus : int {
  kPass = 0,
  kAssertionFailure = 1,
  kRuntimeError = 2,
  kTimeout = 124,
};

inline constexpr std::string_view kMuidConstant = "MUID_STATIC";
inline constexpr std::int64_t kDefaultStepBudget = 10000;

struct TestOutcome {
  int status = 0;
  std::string message;  // empty iff status == 0
  std::int64_t steps_used = 0;

  bool operator==(const TestOutcome&) const = default;
};

struct TestResult {
  TestOutcome outcome;
  // "PRINT <text>", "SEND <action-or-target>", "CLICK <widgetId>".
  std::vector<std::string> event_log;

  bool operator==(const TestResult&) const = default;
};

// A project that failed the load-time checks (duplicate or unknown
// functions, builtin arity).
class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Builtin arity, or nullopt when `name` is not a builtin.
std::optional<int> BuiltinArity(std::string_view name);

// A loaded, executable project. Owns the project so function pointers stay
// valid; safe to share between concurrently running sessions.
class Program {
 public:
  explicit Program(Project project);

  Program(const Program&) = delete;
  Program& operator=(const Program&) = delete;
  Program(Program&&) = default;
  Program& operator=(Program&&) = default;

  const Project& project() const { return project_; }
  const Node* FindFunction(std::string_view name) const;
  std::vector<std::string> EntryTests() const { return project_.EntryTests(); }

 private:
  Project project_;
  std::unordered_map<std::string, const Node*> functions_;
};

struct SessionOptions {
  std::int64_t muid = kOriginalMuid;
  std::int64_t step_budget = kDefaultStepBudget;
};

// Runs one test function in a fresh session.
TestResult RunTest(const Program& program, std::string_view test_name,
                   const SessionOptions& options);

// Same, reading the active mutant id once from `env`.
TestResult RunTest(const Program& program, std::string_view test_name,
                   const Environment& env, std::int64_t step_budget);

// Runs `fn_name` with no arguments and returns its value; used by the
// dispatch benchmark. Throws std::runtime_error if the call does not
// complete normally.
Value CallFunction(const Program& program, std::string_view fn_name,
                   const SessionOptions& options);

}  // namespace minimut

#endif  // MINIMUT_RUNTIME_INTERPRETER_H_
