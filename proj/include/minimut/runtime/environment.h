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

#ifndef MINIMUT_RUNTIME_ENVIRONMENT_H_
#define MINIMUT_RUNTIME_ENVIRONMENT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace minimut {

inline constexpr std::string_view kMuidVariable = "METFORD_MUID";
inline constexpr std::int64_t kOriginalMuid = -1;

// Execution environment a session reads its mutant id from. Either a
// snapshot of explicit variables or a view of the process environment.
class Environment {
 public:
  Environment() = default;
  static Environment FromProcess();

  // Returns a copy with METFORD_MUID set to `muid`.
  static Environment WithMuid(std::int64_t muid);

  void Set(std::string name, std::string value);
  void Unset(std::string_view name);
  std::optional<std::string> Get(std::string_view name) const;

 private:
  std::map<std::string, std::string, std::less<>> vars_;
  bool process_ = false;
};

// Active mutant id: METFORD_MUID as a decimal integer, -1 when absent or
// unparseable.
std::int64_t FetchMuid(const Environment& env);

}  // namespace minimut

#endif  // MINIMUT_RUNTIME_ENVIRONMENT_H_
