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

#ifndef MINIMUT_MUTAGEN_ITERATOR_H_
#define MINIMUT_MUTAGEN_ITERATOR_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "minimut/lang/project.h"
#include "minimut/mutagen/mutation.h"
#include "minimut/operators/catalog.h"

namespace minimut {

struct GenerationOptions {
  std::vector<OperatorKind> operators;
  std::uint64_t seed = 42;
  std::int64_t stride = kDefaultStride;
  std::int64_t delay_steps = kDefaultDelaySteps;
  // Module paths (relative) or directory prefixes ending in '/' that are
  // never mutated and are copied verbatim.
  std::vector<std::string> exclude;

  bool Excluded(const std::string& module_path) const;
};

// True when `node` is a point for at least one of `operators`.
bool IsPointForAny(const std::vector<OperatorKind>& operators, const Node& node,
                   const Node* parent, const ProjectFacts& facts);

// All mutation points of the non-excluded modules in module-major preorder.
// Throws PointOverflow when they do not fit the stride.
std::vector<MutationPoint> EnumeratePoints(const Project& project,
                                           const GenerationOptions& options,
                                           const ProjectFacts& facts);

// Iterator over the mutations one operator produces at the points handed to
// it. Mutations are applied to the project in place; Restore() undoes the
// last one. Calls out of order throw ContractViolation.
class MutatorIterator {
 public:
  MutatorIterator(OperatorKind kind, Project& project, const ProjectFacts& facts,
                  SeededStream& stream, std::int64_t stride = kDefaultStride);

  // Queues the mutations of this operator at `point`. Their ordinals start at
  // `first_ordinal`. Drops anything still queued from the previous point.
  void AddPoint(const MutationPoint& point, int first_ordinal = 0);

  bool HasMutations() const;

  // Applies the next queued mutation and describes it.
  MutationRecord Mutate();

  // Undoes the mutation applied by the last Mutate().
  void Restore();

  const MutationPoint& GetMutationPoint() const;

  // The applied mutation as a splice on the unmutated tree. Valid after
  // Mutate() until the next AddPoint().
  const StatementSplice& LastSplice() const;

  OperatorKind kind() const { return kind_; }

 private:
  OperatorKind kind_;
  Project& project_;
  const ProjectFacts& facts_;
  SeededStream& stream_;
  std::int64_t stride_;

  std::optional<MutationPoint> point_;
  int first_ordinal_ = 0;
  std::vector<Alteration> queue_;
  std::size_t next_ = 0;
  std::vector<StatementSplice> splices_;

  bool applied_ = false;
  Node* applied_block_ = nullptr;
  std::vector<Node> removed_;
  std::optional<StatementSplice> last_;
};

using MutantVisitor = std::function<void(
    const MutationRecord& record, const StatementSplice& splice,
    const Project& mutated)>;

// Drives every configured operator over every point: points in order, and at
// each point the operators in configuration order, so the per-point ordinal
// k counts across operators. `visit` sees the project with the mutation
// applied; it is restored afterwards. Returns the records in generation
// order.
std::vector<MutationRecord> ForEachMutant(Project& project,
                                          const GenerationOptions& options,
                                          const MutantVisitor& visit = nullptr);

struct PlannedMutant {
  MutationRecord record;
  StatementSplice splice;
};

// Records and splices without keeping any mutated tree.
std::vector<PlannedMutant> PlanMutants(Project project,
                                       const GenerationOptions& options);

}  // namespace minimut

#endif  // MINIMUT_MUTAGEN_ITERATOR_H_
