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

#include "minimut/metrics/diff.h"

#include <algorithm>
#include <cstdlib>

namespace minimut {

std::int64_t DeadMutants(const KillingMatrix& matrix) {
  std::int64_t dead = 0;
  for (std::size_t r = 0; r < matrix.muids.size(); ++r) {
    if (matrix.muids[r] < 0) continue;
    const auto& row = matrix.cells[r];
    if (std::any_of(row.begin(), row.end(),
                    [](const std::optional<int>& c) { return c && *c != 0; })) {
      ++dead;
    }
  }
  return dead;
}

DivergenceReport DiffStrategies(const KillingMatrix& a, const KillingMatrix& b) {
  if (a.tests != b.tests) throw ShapeMismatch("killing matrices have different tests");
  if (a.muids != b.muids) throw ShapeMismatch("killing matrices have different mutants");
  DivergenceReport report;
  report.difference = std::llabs(DeadMutants(a) - DeadMutants(b));
  for (std::size_t r = 0; r < a.muids.size(); ++r) {
    for (std::size_t t = 0; t < a.tests.size(); ++t) {
      if (a.cells[r][t] != b.cells[r][t]) {
        report.cells.push_back({a.muids[r], a.tests[t], a.cells[r][t], b.cells[r][t]});
      }
    }
  }
  report.divergences = static_cast<std::int64_t>(report.cells.size());
  return report;
}

}  // namespace minimut
