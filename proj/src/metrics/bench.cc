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

#include "minimut/metrics/bench.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "minimut/lang/project.h"
#include "minimut/runtime/interpreter.h"

namespace minimut {

namespace {

constexpr const char* kSelectors[] = {"const-int", "mutable-int", "string"};
constexpr const char* kShapes[] = {"dispatch", "if-else"};
constexpr const char* kBranches[] = {"first", "default"};

std::string Alternative(int k) { return "x = a * b + " + std::to_string(k) + ";"; }
constexpr const char* kOriginal = "x = a + b;";

std::string Condition(const std::string& selector, int k) {
  if (selector == "const-int") return "getMUID() == " + std::to_string(k);
  if (selector == "mutable-int") return "sel == " + std::to_string(k);
  return "sel == \"" + std::to_string(k) + "\"";
}

std::string IfChain(const std::string& selector, int k, int n, const std::string& pad) {
  if (k == n) return pad + kOriginal + "\n";
  return pad + "if (" + Condition(selector, k) + ") {\n" + pad + "  " +
         Alternative(k) + "\n" + pad + "} else {\n" +
         IfChain(selector, k + 1, n, pad + "  ") + pad + "}\n";
}

double OneDecimal(double v) { return std::round(v * 10.0) / 10.0; }

BenchRow Measure(const std::string& variant, const std::string& selector,
                 const std::string& shape, const std::string& branch,
                 const BenchOptions& options) {
  Program program(ParseProject({{"bench.mini", BenchSource(selector, shape, options)}}));
  SessionOptions session;
  session.muid = branch == "first" ? 0 : kOriginalMuid;
  session.step_budget = std::int64_t{1} << 50;
  const std::int64_t expected = branch == "first" ? 21 : 10;
  auto run = [&] {
    const Value v = CallFunction(program, "bench", session);
    if (!v.is_int() || v.as_int() != expected) {
      throw std::logic_error("benchmark " + variant + " took the wrong branch");
    }
  };
  run();  // warm-up
  BenchRow row{variant, branch};
  for (int r = 0; r < options.runs; ++r) {
    const auto start = std::chrono::steady_clock::now();
    run();
    const std::int64_t us = std::chrono::duration_cast<std::chrono::microseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
    row.sum_us += us;
    row.max_us = r == 0 ? us : std::max(row.max_us, us);
    row.min_us = r == 0 ? us : std::min(row.min_us, us);
  }
  row.avg_us = OneDecimal(static_cast<double>(row.sum_us) / options.runs);
  return row;
}

}  // namespace

std::string BenchSource(const std::string& selector, const std::string& shape,
                        const BenchOptions& options) {
  std::string src = "fn bench() {\n  var i = 0;\n  var x = 0;\n  var a = 7;\n  var b = 3;\n";
  if (selector == "mutable-int") src += "  var sel = getMUID();\n";
  if (selector == "string") src += "  var sel = \"\" + getMUID();\n";
  src += "  while (i < " + std::to_string(options.iterations) + ") {\n";
  if (shape == "dispatch") {
    const std::string on =
        selector == "const-int" ? std::string(kMuidConstant) : std::string("sel");
    src += "    dispatch (" + on + ") {\n";
    for (int k = 0; k < options.mutations; ++k) {
      src += "      case " + std::to_string(k) + " {\n        " + Alternative(k) +
             "\n      }\n";
    }
    src += "      default {\n        " + std::string(kOriginal) + "\n      }\n    }\n";
  } else {
    src += IfChain(selector, 0, options.mutations, "    ");
  }
  src += "    i = i + 1;\n  }\n  return x;\n}\n";
  return src;
}

std::vector<BenchRow> RunDispatchBench(const BenchOptions& options) {
  if (options.runs < 1 || options.mutations < 1 || options.iterations < 1) {
    throw std::invalid_argument("benchmark sizes must be positive");
  }
  std::vector<BenchRow> rows;
  for (const char* branch : kBranches) {
    rows.push_back(Measure("baseline", "const-int", "dispatch", branch, options));
  }
  for (const char* branch : kBranches) {
    const double base = rows[branch == std::string("first") ? 0 : 1].avg_us;
    for (const char* shape : kShapes) {
      for (const char* selector : kSelectors) {
        BenchRow row = Measure(std::string(selector) + "-" + shape, selector, shape,
                               branch, options);
        row.inc_percent = base > 0 ? OneDecimal(100.0 * (row.avg_us - base) / base) : 0.0;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::string BenchCsv(const std::vector<BenchRow>& rows) {
  std::string out = "variant;branch;SUM;MAX;MIN;AVG;INC\n";
  for (const BenchRow& r : rows) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%lld;%lld;%lld;%.1f;%.1f\n",
                  static_cast<long long>(r.sum_us), static_cast<long long>(r.max_us),
                  static_cast<long long>(r.min_us), r.avg_us, r.inc_percent);
    out += r.variant + ";" + r.branch + ";" + buf;
  }
  return out;
}

}  // namespace minimut
