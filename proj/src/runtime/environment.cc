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

#include "minimut/runtime/environment.h"

#include <charconv>
#include <cstdlib>

namespace minimut {

Environment Environment::FromProcess() {
  Environment env;
  env.process_ = true;
  return env;
}

Environment Environment::WithMuid(std::int64_t muid) {
  Environment env;
  env.Set(std::string(kMuidVariable), std::to_string(muid));
  return env;
}

void Environment::Set(std::string name, std::string value) {
  vars_[std::move(name)] = std::move(value);
}

void Environment::Unset(std::string_view name) {
  auto it = vars_.find(name);
  if (it != vars_.end()) vars_.erase(it);
}

std::optional<std::string> Environment::Get(std::string_view name) const {
  if (auto it = vars_.find(name); it != vars_.end()) return it->second;
  if (process_) {
    const char* value = std::getenv(std::string(name).c_str());
    if (value != nullptr) return std::string(value);
  }
  return std::nullopt;
}

std::int64_t FetchMuid(const Environment& env) {
  const std::optional<std::string> raw = env.Get(kMuidVariable);
  if (!raw || raw->empty()) return kOriginalMuid;
  std::int64_t value = 0;
  const char* begin = raw->data();
  const char* end = begin + raw->size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) return kOriginalMuid;
  return value;
}

}  // namespace minimut
