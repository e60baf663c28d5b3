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

#ifndef MINIMUT_RUNTIME_VALUE_H_
#define MINIMUT_RUNTIME_VALUE_H_

#include <cstdint>
#include <string>
#include <variant>

namespace minimut {

struct WidgetRef {
  std::string id;
  bool operator==(const WidgetRef&) const = default;
};

struct IntentRef {
  int handle = 0;
  bool operator==(const IntentRef&) const = default;
};

// Runtime value of a Mini-App expression.
class Value {
 public:
  using Storage = std::variant<std::monostate, std::int64_t, std::string, bool,
                               WidgetRef, IntentRef>;

  Value() = default;
  static Value Null() { return Value(); }
  static Value Int(std::int64_t v) { return Value(Storage(v)); }
  static Value Str(std::string v) { return Value(Storage(std::move(v))); }
  static Value Bool(bool v) { return Value(Storage(v)); }
  static Value Widget(std::string id) { return Value(Storage(WidgetRef{std::move(id)})); }
  static Value Intent(int handle) { return Value(Storage(IntentRef{handle})); }

  bool is_null() const { return std::holds_alternative<std::monostate>(v_); }
  bool is_int() const { return std::holds_alternative<std::int64_t>(v_); }
  bool is_str() const { return std::holds_alternative<std::string>(v_); }
  bool is_bool() const { return std::holds_alternative<bool>(v_); }
  bool is_widget() const { return std::holds_alternative<WidgetRef>(v_); }
  bool is_intent() const { return std::holds_alternative<IntentRef>(v_); }

  std::int64_t as_int() const { return std::get<std::int64_t>(v_); }
  const std::string& as_str() const { return std::get<std::string>(v_); }
  bool as_bool() const { return std::get<bool>(v_); }
  const WidgetRef& as_widget() const { return std::get<WidgetRef>(v_); }
  const IntentRef& as_intent() const { return std::get<IntentRef>(v_); }

  std::string_view TypeName() const;

  // Text used by print, string concatenation and assertion messages.
  std::string ToText() const;

  bool operator==(const Value& other) const { return v_ == other.v_; }

 private:
  explicit Value(Storage v) : v_(std::move(v)) {}
  Storage v_;
};

}  // namespace minimut

#endif  // MINIMUT_RUNTIME_VALUE_H_
