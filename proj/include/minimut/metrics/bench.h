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

#ifndef MINIMUT_METRICS_BENCH_H_
#define MINIMUT_METRICS_BENCH_H_

#include <cstdint>
#include <string>
#include <vector>

namespace minimut {

// One statement carrying `mutations` alternatives, selected by
//   selector: constant-int (the session's MUID), mutable-int (a local
//             variable) or string (a local string);
//   shape:    a dispatch statement or a nested if-else chain;
//   branch:   "first" (the first alternative) or "default" (the original,
//             reached after every comparison).
// The baseline is the constant-int dispatch, measured on its own.
struct BenchOptions {
  int mutations = 100;
  int runs = 30;
  int iterations = 100;  // loop trips per timed run
};

struct BenchRow {
  std::string variant;  // "baseline" or "<selector>-<shape>"
  std::string branch;
  std::int64_t sum_us = 0;
  std::int64_t max_us = 0;
  std::int64_t min_us = 0;
  double avg_us = 0;  // one decimal
  double inc_percent = 0;  // vs the baseline of the same branch, one decimal
};

// Mini-App source of one benchmark program; its fn bench() runs the loop.
std::string BenchSource(const std::string& selector, const std::string& shape,
                        const BenchOptions& options);

// Two baseline rows, then six variants for each branch.
std::vector<BenchRow> RunDispatchBench(const BenchOptions& options);

// "variant;branch;SUM;MAX;MIN;AVG;INC" header, one line per row.
std::string BenchCsv(const std::vector<BenchRow>& rows);

}  // namespace minimut

#endif  // MINIMUT_METRICS_BENCH_H_
