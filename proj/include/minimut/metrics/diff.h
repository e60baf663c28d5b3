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

#ifndef MINIMUT_METRICS_DIFF_H_
#define MINIMUT_METRICS_DIFF_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "minimut/executor/campaign.h"

namespace minimut {

// The two matrices disagree on their mutant rows or test columns.
class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct DivergentCell {
  std::int64_t muid = 0;
  std::string test;
  std::optional<int> status_a;
  std::optional<int> status_b;

  bool operator==(const DivergentCell&) const = default;
};

struct DivergenceReport {
  // |dead(a) - dead(b)| over mutant rows.
  std::int64_t difference = 0;
  // Number of unequal cells, the original's row included.
  std::int64_t divergences = 0;
  std::vector<DivergentCell> cells;
};

DivergenceReport DiffStrategies(const KillingMatrix& a, const KillingMatrix& b);

// Mutant rows with at least one nonzero cell.
std::int64_t DeadMutants(const KillingMatrix& matrix);

}  // namespace minimut

#endif  // MINIMUT_METRICS_DIFF_H_
