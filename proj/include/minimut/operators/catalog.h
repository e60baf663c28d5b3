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

#ifndef MINIMUT_OPERATORS_CATALOG_H_
#define MINIMUT_OPERATORS_CATALOG_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "minimut/lang/ast.h"
#include "minimut/lang/project.h"
#include "minimut/mutagen/mutation.h"

namespace minimut {

// The fourteen operators, in catalog order.
enum class OperatorKind {
  kBMA,     // BinaryMutator (Arithmetic)
  kBGL,     // BuggyGUIListener
  kFVBIRN,  // FindViewByIdReturnsNull
  kIPLR,    // IntentPayloadReplacement
  kITR,     // IntentTargetReplacement
  kIIFV,    // InvalidIDFindView
  kIKI,     // InvalidKeyIntent
  kIVF,     // InvalidViewFocus
  kLGC,     // LengthyGUICreation
  kLGL,     // LengthyGUIListener
  kNI,      // NullIntent
  kNVIPE,   // NullValueIntentPutExtra
  kRAID,    // RandomActionIntentDefinition
  kVCNV,    // ViewComponentNotVisible
};

const std::vector<OperatorKind>& AllOperators();

// Acronym as accepted in configuration ("BMA", ..., "VCNV").
std::string_view OperatorName(OperatorKind kind);

// Descriptive name used in woven arm labels, e.g. "NullIntentOperatorMutator".
std::string_view OperatorClassName(OperatorKind kind);

// Case-sensitive acronym lookup.
std::optional<OperatorKind> ParseOperatorName(std::string_view name);

// Intent actions of the toy framework; RAID draws from this list.
inline constexpr std::array<std::string_view, 5> kActionList = {
    "SEND", "VIEW", "EDIT", "DIAL", "MAIN"};

inline constexpr std::string_view kNoopListener = "__noop";
inline constexpr std::string_view kInvalidId = "__invalid_id__";
inline constexpr std::string_view kInvalidKey = "__invalid_key__";
inline constexpr std::int64_t kDefaultDelaySteps = 10000;

// Project-wide facts some eligibility rules depend on.
struct ProjectFacts {
  std::set<std::string> intent_targets;   // string literals of newIntentTo
  std::set<std::string> click_listeners;  // string literals of onClick
  std::int64_t delay_steps = kDefaultDelaySteps;
};

ProjectFacts CollectFacts(const Project& project, std::int64_t delay_steps);

// Where an alteration lands relative to the point.
enum class AlterationShape {
  kReplaceNode,       // nodes[0] replaces the point node
  kReplaceStatement,  // nodes replace the statement holding the point
  kPrependToBody,     // nodes are inserted at the start of the point's body
};

struct Alteration {
  AlterationShape shape = AlterationShape::kReplaceNode;
  std::vector<Node> nodes;
  std::map<std::string, std::string> args;
  std::string original_text;
  std::string replacement_text;
};

// Whether `node` (whose parent is `parent`) is a mutation point for `kind`.
// A declaration `var x = e;` counts as the assignment `x = e;`. Never draws
// from a stream; eligible points always yield at least one alteration.
bool IsEligible(OperatorKind kind, const Node& node, const Node* parent,
                const ProjectFacts& facts);

// Alterations of `kind` at an eligible point, in a fixed order. Operators
// with randomness draw from `stream`.
std::vector<Alteration> GenerateMutations(OperatorKind kind, const Node& node,
                                          const Node* parent,
                                          const ProjectFacts& facts,
                                          SeededStream& stream);

}  // namespace minimut

#endif  // MINIMUT_OPERATORS_CATALOG_H_
