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

#include "minimut/runtime/interpreter.h"

#include <array>
#include <charconv>
#include <utility>

namespace minimut {

std::string_view Value::TypeName() const {
  switch (v_.index()) {
    case 0: return "null";
    case 1: return "int";
    case 2: return "string";
    case 3: return "bool";
    case 4: return "widget";
    default: return "intent";
  }
}

std::string Value::ToText() const {
  if (is_null()) return "null";
  if (is_int()) return std::to_string(as_int());
  if (is_str()) return as_str();
  if (is_bool()) return as_bool() ? "true" : "false";
  if (is_widget()) return "widget:" + as_widget().id;
  return "intent:" + std::to_string(as_intent().handle);
}

namespace {

struct BuiltinInfo {
  std::string_view name;
  int arity;
};

constexpr std::array<BuiltinInfo, 17> kBuiltins = {{
    {"createWidget", 1}, {"findViewById", 1}, {"setVisible", 2},
    {"requestFocus", 1}, {"clearFocus", 1},   {"onClick", 2},
    {"click", 1},        {"newIntent", 1},    {"newIntentTo", 1},
    {"putExtra", 3},     {"getExtra", 2},     {"send", 1},
    {"sleep", 1},        {"print", 1},        {"assertEq", 2},
    {"assertTrue", 1},   {"getMUID", 0},
}};

constexpr int kMaxCallDepth = 1000;

void CheckCalls(const Node& node,
                const std::unordered_map<std::string, const Node*>& functions,
                const std::string& module) {
  if (node.kind == NodeKind::kCall) {
    const std::size_t argc = node.children.size();
    if (auto arity = BuiltinArity(node.text)) {
      if (static_cast<std::size_t>(*arity) != argc) {
        throw LoadError(module + ": builtin " + node.text + " expects " +
                        std::to_string(*arity) + " argument(s), got " +
                        std::to_string(argc));
      }
    } else {
      auto it = functions.find(node.text);
      if (it == functions.end()) {
        throw LoadError(module + ": call to unknown function " + node.text);
      }
      const std::size_t params = it->second->children.size() - 1;
      if (params != argc) {
        throw LoadError(module + ": function " + node.text + " expects " +
                        std::to_string(params) + " argument(s), got " +
                        std::to_string(argc));
      }
    }
  }
  for (const Node& child : node.children) CheckCalls(child, functions, module);
}

}  // namespace

std::optional<int> BuiltinArity(std::string_view name) {
  for (const BuiltinInfo& b : kBuiltins) {
    if (b.name == name) return b.arity;
  }
  return std::nullopt;
}

Program::Program(Project project) : project_(std::move(project)) {
  for (std::size_t m = 0; m < project_.asts.size(); ++m) {
    for (const Node& fn : project_.asts[m].root.children) {
      if (BuiltinArity(fn.text)) {
        throw LoadError(project_.modules[m].path + ": function " + fn.text +
                        " shadows a builtin");
      }
      if (!functions_.emplace(fn.text, &fn).second) {
        throw LoadError(project_.modules[m].path + ": duplicate function " +
                        fn.text);
      }
    }
  }
  for (std::size_t m = 0; m < project_.asts.size(); ++m) {
    CheckCalls(project_.asts[m].root, functions_, project_.modules[m].path);
  }
}

const Node* Program::FindFunction(std::string_view name) const {
  auto it = functions_.find(std::string(name));
  return it == functions_.end() ? nullptr : it->second;
}

namespace {

// Unwinds the session with a final status.
struct Abort {
  int status;
  std::string message;
};

struct Widget {
  bool visible = true;
  bool focused = false;
  std::map<std::string, std::string> listeners;  // event -> function name
};

struct Intent {
  std::optional<std::string> action;
  std::optional<std::string> target_fn;
  std::map<std::string, Value> extras;
};

using Frame = std::unordered_map<std::string, Value>;

enum class Flow { kNormal, kReturn };

class Session {
 public:
  Session(const Program& program, const SessionOptions& options)
      : program_(program), muid_(options.muid), budget_(options.step_budget) {}

  TestResult Run(std::string_view test_name) {
    TestResult result;
    try {
      Invoke(test_name, {});
    } catch (const Abort& abort) {
      result.outcome.status = abort.status;
      result.outcome.message = abort.message;
    }
    result.outcome.steps_used = steps_;
    result.event_log = std::move(events_);
    return result;
  }

  Value Call(std::string_view fn_name) {
    try {
      return Invoke(fn_name, {});
    } catch (const Abort& abort) {
      throw std::runtime_error(std::string(fn_name) + ": " + abort.message);
    }
  }

 private:
  [[noreturn]] static void RuntimeError(std::string message) {
    throw Abort{static_cast<int>(TestStatus::kRuntimeError), std::move(message)};
  }

  void Charge(std::int64_t steps) {
    if (steps > budget_ - steps_) {
      steps_ = budget_;
      throw Abort{static_cast<int>(TestStatus::kTimeout),
                  "timeout: step budget of " + std::to_string(budget_) +
                      " exhausted"};
    }
    steps_ += steps;
  }

  Value Invoke(std::string_view name, std::vector<Value> args) {
    const Node* fn = program_.FindFunction(name);
    if (fn == nullptr) RuntimeError("call to unknown function " + std::string(name));
    const std::size_t params = fn->children.size() - 1;
    if (params != args.size()) {
      RuntimeError("function " + std::string(name) + " expects " +
                   std::to_string(params) + " argument(s)");
    }
    if (depth_ >= kMaxCallDepth) RuntimeError("stack overflow");
    ++depth_;
    Frame frame;
    for (std::size_t i = 0; i < params; ++i) {
      frame[fn->children[i].text] = std::move(args[i]);
    }
    Value result;
    if (ExecBlock(FunctionBody(*fn), frame, result) == Flow::kNormal) {
      result = Value::Null();
    }
    --depth_;
    return result;
  }

  Flow ExecBlock(const Node& block, Frame& frame, Value& result) {
    Charge(1);
    return ExecStatements(block, frame, result);
  }

  Flow ExecStatements(const Node& block, Frame& frame, Value& result) {
    for (const Node& stmt : block.children) {
      if (Exec(stmt, frame, result) == Flow::kReturn) return Flow::kReturn;
    }
    return Flow::kNormal;
  }

  Flow Exec(const Node& stmt, Frame& frame, Value& result) {
    // Woven dispatch machinery is free so woven and materialized mutants
    // consume identical step counts.
    if (stmt.kind == NodeKind::kDispatch) return ExecDispatch(stmt, frame, result);
    // A bare `var x;` is free too: declaration decomposition then leaves
    // step counts of the original program unchanged.
    const bool bare_decl = stmt.kind == NodeKind::kVarDecl && stmt.children.empty();
    if (!bare_decl) Charge(1);
    switch (stmt.kind) {
      case NodeKind::kVarDecl:
        frame[stmt.text] =
            stmt.children.empty() ? Value::Null() : Eval(stmt.children[0], frame);
        return Flow::kNormal;
      case NodeKind::kAssign: {
        Value v = Eval(stmt.children[0], frame);
        auto it = frame.find(stmt.text);
        if (it == frame.end()) RuntimeError("assignment to undeclared variable " + stmt.text);
        it->second = std::move(v);
        return Flow::kNormal;
      }
      case NodeKind::kExprStmt:
        Eval(stmt.children[0], frame);
        return Flow::kNormal;
      case NodeKind::kReturn:
        result = stmt.children.empty() ? Value::Null() : Eval(stmt.children[0], frame);
        return Flow::kReturn;
      case NodeKind::kIf:
        if (Condition(stmt.children[0], frame, "if")) {
          return ExecBlock(stmt.children[1], frame, result);
        }
        if (stmt.children.size() > 2) return ExecBlock(stmt.children[2], frame, result);
        return Flow::kNormal;
      case NodeKind::kWhile:
        while (Condition(stmt.children[0], frame, "while")) {
          if (ExecBlock(stmt.children[1], frame, result) == Flow::kReturn) {
            return Flow::kReturn;
          }
        }
        return Flow::kNormal;
      default:
        RuntimeError("unexpected " + std::string(NodeKindName(stmt.kind)));
    }
  }

  Flow ExecDispatch(const Node& dispatch, Frame& frame, Value& result) {
    Value selector;
    if (dispatch.text == kMuidConstant) {
      selector = Value::Int(muid_);
    } else {
      auto it = frame.find(dispatch.text);
      if (it == frame.end()) RuntimeError("undefined variable " + dispatch.text);
      selector = it->second;
    }
    for (const Node& arm : dispatch.children) {
      if (arm.kind == NodeKind::kDefault || Matches(selector, arm.text)) {
        return ExecStatements(arm.children[0], frame, result);
      }
    }
    return Flow::kNormal;
  }

  static bool Matches(const Value& selector, const std::string& label) {
    if (selector.is_int()) {
      std::int64_t value = 0;
      const char* end = label.data() + label.size();
      const auto [ptr, ec] = std::from_chars(label.data(), end, value);
      return ec == std::errc() && ptr == end && value == selector.as_int();
    }
    if (selector.is_str()) return selector.as_str() == label;
    return false;
  }

  bool Condition(const Node& expr, Frame& frame, std::string_view what) {
    Value v = Eval(expr, frame);
    if (!v.is_bool()) {
      RuntimeError(std::string(what) + " condition is " +
                   std::string(v.TypeName()) + ", not bool");
    }
    return v.as_bool();
  }

  Value Eval(const Node& expr, Frame& frame) {
    Charge(1);
    switch (expr.kind) {
      case NodeKind::kInt:
        return Value::Int(std::stoll(expr.text));
      case NodeKind::kString:
        return Value::Str(expr.text);
      case NodeKind::kBool:
        return Value::Bool(expr.text == "true");
      case NodeKind::kNull:
        return Value::Null();
      case NodeKind::kIdent: {
        if (expr.text == kMuidConstant) return Value::Int(muid_);
        auto it = frame.find(expr.text);
        if (it == frame.end()) RuntimeError("undefined variable " + expr.text);
        return it->second;
      }
      case NodeKind::kUnary:
        return EvalUnary(expr, frame);
      case NodeKind::kBinary:
        return EvalBinary(expr, frame);
      case NodeKind::kCall:
        return EvalCall(expr, frame);
      default:
        RuntimeError("unexpected " + std::string(NodeKindName(expr.kind)));
    }
  }

  Value EvalUnary(const Node& expr, Frame& frame) {
    Value v = Eval(expr.children[0], frame);
    if (expr.text == "-") {
      if (!v.is_int()) RuntimeError("type error: unary - on " + std::string(v.TypeName()));
      return Value::Int(static_cast<std::int64_t>(0ULL - static_cast<std::uint64_t>(v.as_int())));
    }
    if (!v.is_bool()) RuntimeError("type error: ! on " + std::string(v.TypeName()));
    return Value::Bool(!v.as_bool());
  }

  Value EvalBinary(const Node& expr, Frame& frame) {
    const std::string& op = expr.text;
    if (op == "&&" || op == "||") {
      Value lhs = Eval(expr.children[0], frame);
      if (!lhs.is_bool()) RuntimeError("type error: " + op + " on " + std::string(lhs.TypeName()));
      if (op == "&&" ? !lhs.as_bool() : lhs.as_bool()) return lhs;
      Value rhs = Eval(expr.children[1], frame);
      if (!rhs.is_bool()) RuntimeError("type error: " + op + " on " + std::string(rhs.TypeName()));
      return rhs;
    }
    Value lhs = Eval(expr.children[0], frame);
    Value rhs = Eval(expr.children[1], frame);
    if (op == "==") return Value::Bool(lhs == rhs);
    if (op == "!=") return Value::Bool(!(lhs == rhs));
    if (op == "+" && (lhs.is_str() || rhs.is_str())) {
      return Value::Str(lhs.ToText() + rhs.ToText());
    }
    if (!lhs.is_int() || !rhs.is_int()) {
      RuntimeError("type error: " + std::string(lhs.TypeName()) + " " + op +
                   " " + std::string(rhs.TypeName()));
    }
    const std::int64_t a = lhs.as_int();
    const std::int64_t b = rhs.as_int();
    const auto ua = static_cast<std::uint64_t>(a);
    const auto ub = static_cast<std::uint64_t>(b);
    if (op == "+") return Value::Int(static_cast<std::int64_t>(ua + ub));
    if (op == "-") return Value::Int(static_cast<std::int64_t>(ua - ub));
    if (op == "*") return Value::Int(static_cast<std::int64_t>(ua * ub));
    if (op == "/" || op == "%") {
      if (b == 0) RuntimeError("division by zero");
      if (b == -1) {
        return Value::Int(op == "/" ? static_cast<std::int64_t>(0ULL - ua) : 0);
      }
      return Value::Int(op == "/" ? a / b : a % b);
    }
    if (op == "<") return Value::Bool(a < b);
    if (op == "<=") return Value::Bool(a <= b);
    if (op == ">") return Value::Bool(a > b);
    if (op == ">=") return Value::Bool(a >= b);
    RuntimeError("unknown operator " + op);
  }

  Value EvalCall(const Node& call, Frame& frame) {
    std::vector<Value> args;
    args.reserve(call.children.size());
    for (const Node& arg : call.children) args.push_back(Eval(arg, frame));
    if (BuiltinArity(call.text)) return CallBuiltin(call.text, args);
    return Invoke(call.text, std::move(args));
  }

  // Receiver of a method-style builtin; null is a null dereference.
  Widget& WidgetArg(const std::string& fn, const Value& v) {
    if (v.is_null()) RuntimeError("null dereference in " + fn);
    if (!v.is_widget()) RuntimeError("type error: " + fn + " expects a widget");
    auto it = widgets_.find(v.as_widget().id);
    if (it == widgets_.end()) RuntimeError("null dereference in " + fn);
    return it->second;
  }

  Intent& IntentArg(const std::string& fn, const Value& v) {
    if (v.is_null()) RuntimeError("null dereference in " + fn);
    if (!v.is_intent()) RuntimeError("type error: " + fn + " expects an intent");
    return intents_.at(v.as_intent().handle);
  }

  static const std::string& StrArg(const std::string& fn, const Value& v) {
    if (!v.is_str()) RuntimeError("type error: " + fn + " expects a string");
    return v.as_str();
  }

  Value CallListener(const std::string& fn_name, const Value& subject) {
    const Node* fn = program_.FindFunction(fn_name);
    if (fn == nullptr) RuntimeError("call to unknown function " + fn_name);
    std::vector<Value> args;
    if (fn->children.size() - 1 == 1) args.push_back(subject);
    return Invoke(fn_name, std::move(args));
  }

  Value CallBuiltin(const std::string& fn, std::vector<Value>& args) {
    if (fn == "createWidget") {
      const std::string& id = StrArg(fn, args[0]);
      widgets_.try_emplace(id);
      return Value::Widget(id);
    }
    if (fn == "findViewById") {
      const std::string& id = StrArg(fn, args[0]);
      if (widgets_.count(id) == 0) return Value::Null();
      return Value::Widget(id);
    }
    if (fn == "setVisible") {
      Widget& w = WidgetArg(fn, args[0]);
      if (!args[1].is_bool()) RuntimeError("type error: setVisible expects a bool");
      w.visible = args[1].as_bool();
      if (!w.visible) w.focused = false;
      return Value::Null();
    }
    if (fn == "requestFocus") {
      Widget& w = WidgetArg(fn, args[0]);
      if (!w.visible) {
        RuntimeError("focus request on invisible widget " + args[0].as_widget().id);
      }
      for (auto& [id, other] : widgets_) other.focused = false;
      w.focused = true;
      return Value::Null();
    }
    if (fn == "clearFocus") {
      WidgetArg(fn, args[0]).focused = false;
      return Value::Null();
    }
    if (fn == "onClick") {
      Widget& w = WidgetArg(fn, args[0]);
      w.listeners["click"] = StrArg(fn, args[1]);
      return Value::Null();
    }
    if (fn == "click") {
      Widget& w = WidgetArg(fn, args[0]);
      const std::string& id = args[0].as_widget().id;
      if (!w.visible) RuntimeError("click on invisible widget " + id);
      events_.push_back("CLICK " + id);
      auto it = w.listeners.find("click");
      if (it == w.listeners.end()) return Value::Null();
      const std::string listener = it->second;
      return CallListener(listener, args[0]);
    }
    if (fn == "newIntent" || fn == "newIntentTo") {
      Intent intent;
      if (fn == "newIntent") {
        intent.action = StrArg(fn, args[0]);
      } else {
        intent.target_fn = StrArg(fn, args[0]);
      }
      const int handle = next_intent_++;
      intents_.emplace(handle, std::move(intent));
      return Value::Intent(handle);
    }
    if (fn == "putExtra") {
      Intent& intent = IntentArg(fn, args[0]);
      intent.extras[StrArg(fn, args[1])] = args[2];
      return Value::Null();
    }
    if (fn == "getExtra") {
      Intent& intent = IntentArg(fn, args[0]);
      auto it = intent.extras.find(StrArg(fn, args[1]));
      return it == intent.extras.end() ? Value::Null() : it->second;
    }
    if (fn == "send") {
      Intent& intent = IntentArg(fn, args[0]);
      if (intent.target_fn) {
        const std::string target = *intent.target_fn;
        events_.push_back("SEND " + target);
        return CallListener(target, args[0]);
      }
      events_.push_back("SEND " + *intent.action);
      return Value::Str(*intent.action);
    }
    if (fn == "sleep") {
      if (!args[0].is_int() || args[0].as_int() < 0) {
        RuntimeError("type error: sleep expects a non-negative int");
      }
      Charge(args[0].as_int());
      return Value::Null();
    }
    if (fn == "print") {
      events_.push_back("PRINT " + args[0].ToText());
      return Value::Null();
    }
    if (fn == "assertEq") {
      if (!(args[0] == args[1])) {
        throw Abort{static_cast<int>(TestStatus::kAssertionFailure),
                    "assertEq failed: expected " + args[0].ToText() +
                        " but was " + args[1].ToText()};
      }
      return Value::Null();
    }
    if (fn == "assertTrue") {
      if (!args[0].is_bool() || !args[0].as_bool()) {
        throw Abort{static_cast<int>(TestStatus::kAssertionFailure),
                    "assertTrue failed: got " + args[0].ToText()};
      }
      return Value::Null();
    }
    if (fn == "getMUID") return Value::Int(muid_);
    RuntimeError("unknown builtin " + fn);
  }

  const Program& program_;
  const std::int64_t muid_;
  const std::int64_t budget_;
  std::int64_t steps_ = 0;
  int depth_ = 0;
  std::map<std::string, Widget> widgets_;
  std::map<int, Intent> intents_;
  int next_intent_ = 1;
  std::vector<std::string> events_;
};

}  // namespace

TestResult RunTest(const Program& program, std::string_view test_name,
                   const SessionOptions& options) {
  Session session(program, options);
  return session.Run(test_name);
}

TestResult RunTest(const Program& program, std::string_view test_name,
                   const Environment& env, std::int64_t step_budget) {
  SessionOptions options;
  options.muid = FetchMuid(env);
  options.step_budget = step_budget;
  return RunTest(program, test_name, options);
}

Value CallFunction(const Program& program, std::string_view fn_name,
                   const SessionOptions& options) {
  Session session(program, options);
  return session.Call(fn_name);
}

}  // namespace minimut
