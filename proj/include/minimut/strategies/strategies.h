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

#ifndef MINIMUT_STRATEGIES_STRATEGIES_H_
#define MINIMUT_STRATEGIES_STRATEGIES_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "minimut/lang/project.h"
#include "minimut/mutagen/iterator.h"
#include "minimut/mutagen/mutation.h"

namespace minimut {

// Splits every `var x = e;` whose initializer holds a mutation point into
// `var x; x = e;`, injects the empty `__noop` listener BGL needs, and
// re-renders the mutable modules in canonical form. Excluded modules keep
// their text. Both strategies start from this tree.
Project Normalize(const Project& project, const GenerationOptions& options);

struct DispatchArm {
  int module_index = 0;
  int node_id = 0;  // the `case` node

  bool operator==(const DispatchArm&) const = default;
};

// All mutants woven into a single project.
struct WovenProject {
  Project project;
  std::map<std::int64_t, DispatchArm> dispatch_index;
};

// Wraps every mutated statement in `dispatch (MUID_STATIC)` with one arm per
// mutant and the original statement as the default arm. Insertions get a
// dispatch of their own with an empty default.
WovenProject WeaveSchemata(const Project& normalized,
                           const std::vector<PlannedMutant>& mutants);

// Module texts of the single mutant `mutant` applied to `normalized`.
std::vector<SourceModule> MaterializeMutant(const Project& normalized,
                                            const PlannedMutant& mutant);

struct MaterializedProjectSet {
  std::filesystem::path base_dir;
  std::vector<std::int64_t> muids;  // one tree per muid, in generation order
};

// Writes one complete tree per mutant under `base_dir`/<muid>/.
MaterializedProjectSet MaterializeTraditional(
    Project& normalized, const GenerationOptions& options,
    const std::filesystem::path& base_dir,
    std::vector<MutationRecord>* records = nullptr);

// End-to-end generation for one strategy, as timed by the cost report.
struct GenerationResult {
  std::vector<MutationRecord> records;
  double seconds = 0;
};

// Reads `project_dir`, normalizes, weaves and writes `out_dir`/schemata/
// together with its MutationInfo.json.
GenerationResult GenerateSchemata(const std::filesystem::path& project_dir,
                                  const GenerationOptions& options,
                                  const std::filesystem::path& out_dir);

// Reads `project_dir`, normalizes, writes `out_dir`/original/ and one tree
// per mutant under `out_dir`/traditional/, plus its MutationInfo.json.
GenerationResult GenerateTraditional(const std::filesystem::path& project_dir,
                                     const GenerationOptions& options,
                                     const std::filesystem::path& out_dir);

// Records sorted by ascending muid, the order mutants are run in.
std::vector<MutationRecord> SortedByMuid(std::vector<MutationRecord> records);

}  // namespace minimut

#endif  // MINIMUT_STRATEGIES_STRATEGIES_H_
