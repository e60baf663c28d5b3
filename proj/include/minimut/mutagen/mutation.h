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

#ifndef MINIMUT_MUTAGEN_MUTATION_H_
#define MINIMUT_MUTAGEN_MUTATION_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "minimut/lang/ast.h"

namespace minimut {

inline constexpr std::int64_t kDefaultStride = 1000;

// Raised when a project has more mutation points than the id stride can
// encode. The campaign must abort and ask for a larger stride.
class PointOverflow : public std::runtime_error {
 public:
  PointOverflow(std::int64_t point_index, std::int64_t stride);
};

// Out-of-order use of a mutation operator iterator.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class EmptyChoices : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mutant id for the k-th mutation at point p: k * stride + p. Ids therefore
// do not grow linearly with generation order, and the same mutation gets the
// same id in every strategy.
std::int64_t AssignMuid(std::int64_t ordinal, std::int64_t point_index,
                        std::int64_t stride = kDefaultStride);

struct MuidParts {
  std::int64_t ordinal;
  std::int64_t point_index;
};
MuidParts DecomposeMuid(std::int64_t muid, std::int64_t stride = kDefaultStride);

struct MutationPoint {
  int module_index = 0;
  int node_id = 0;
  int point_index = 0;  // dense, project-wide, module-major preorder

  bool operator==(const MutationPoint&) const = default;
};

struct MutationRecord {
  std::int64_t muid = -1;
  std::string operator_name;
  MutationPoint point;
  int ordinal = 0;
  std::string original_text;
  std::string replacement_text;
  std::map<std::string, std::string> args;
  std::string file;
  int line = 0;
  int column = 0;

  bool operator==(const MutationRecord&) const = default;
};

// A mutation as a statement splice on the normalized tree: remove
// `remove_count` statements at `index` of the block `block_id` and put
// `statements` there instead.
struct StatementSplice {
  int module_index = 0;
  int block_id = 0;
  int index = 0;
  int remove_count = 1;
  std::vector<Node> statements;
};

// Counter-based deterministic randomness. The n-th draw is a pure function
// of (seed, operator name, n), so generation order across workers or
// strategies cannot perturb it.
class SeededStream {
 public:
  SeededStream(std::uint64_t seed, std::string operator_name);

  static std::uint64_t Value(std::uint64_t seed, std::string_view operator_name,
                             std::uint64_t n);

  // Index in [0, size); advances the cursor.
  std::size_t DrawIndex(std::size_t size);

  template <typename T>
  const T& Draw(std::span<const T> choices) {
    return choices[DrawIndex(choices.size())];
  }

  std::uint64_t seed() const { return seed_; }
  const std::string& operator_name() const { return operator_name_; }
  std::uint64_t cursor() const { return cursor_; }

 private:
  std::uint64_t seed_;
  std::string operator_name_;
  std::uint64_t cursor_ = 0;
};

// MutationInfo.json: array of {muid, operator, file, line, column, original,
// replacement, args} in that key order.
std::string MutationInfoJson(const std::vector<MutationRecord>& records);

// Parses a MutationInfo document. Only the serialized fields are restored;
// `point` and `ordinal` are recovered from the muid and `stride`.
std::vector<MutationRecord> ParseMutationInfo(std::string_view json,
                                              std::int64_t stride = kDefaultStride);

}  // namespace minimut

#endif  // MINIMUT_MUTAGEN_MUTATION_H_
