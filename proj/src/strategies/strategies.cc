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

#include "minimut/strategies/strategies.h"

#include <algorithm>
#include <chrono>

#include "minimut/lang/parser.h"
#include "minimut/operators/catalog.h"
#include "minimut/runtime/interpreter.h"

namespace minimut {

namespace fs = std::filesystem;

namespace {

bool InitializerHasPoint(const Node& decl, const GenerationOptions& options,
                         const ProjectFacts& facts) {
  if (decl.kind != NodeKind::kVarDecl || decl.children.empty()) return false;
  bool found = false;
  // Walk from the declaration so the initializer sees its real parent.
  Walk(decl, [&](const Node& node, const Node* parent) {
    if (!found && &node != &decl &&
        IsPointForAny(options.operators, node, parent, facts)) {
      found = true;
    }
  });
  return found;
}

void DecomposeDeclarations(Node& node, const GenerationOptions& options,
                           const ProjectFacts& facts) {
  if (node.kind == NodeKind::kBlock) {
    std::vector<Node> statements;
    statements.reserve(node.children.size());
    for (Node& stmt : node.children) {
      if (InitializerHasPoint(stmt, options, facts)) {
        Node init = std::move(stmt.children[0]);
        statements.emplace_back(NodeKind::kVarDecl, stmt.text);
        statements.emplace_back(NodeKind::kAssign, stmt.text,
                                std::vector<Node>{std::move(init)});
      } else {
        statements.push_back(std::move(stmt));
      }
    }
    node.children = std::move(statements);
  }
  for (Node& child : node.children) DecomposeDeclarations(child, options, facts);
}

bool HasBglSite(const Ast& ast, const ProjectFacts& facts) {
  bool found = false;
  Walk(ast.root, [&](const Node& node, const Node* parent) {
    found = found || IsEligible(OperatorKind::kBGL, node, parent, facts);
  });
  return found;
}

Node CaseArm(const PlannedMutant& mutant) {
  const auto kind = ParseOperatorName(mutant.record.operator_name);
  Node arm(NodeKind::kCase, std::to_string(mutant.record.muid),
           {Node(NodeKind::kBlock, "", mutant.splice.statements)});
  arm.label = std::to_string(mutant.record.ordinal) + "_" +
              std::string(kind ? OperatorClassName(*kind)
                               : std::string_view(mutant.record.operator_name));
  return arm;
}

Node Dispatch(std::vector<const PlannedMutant*> arms, Node default_body) {
  std::sort(arms.begin(), arms.end(), [](const auto* a, const auto* b) {
    return a->record.muid < b->record.muid;
  });
  Node dispatch(NodeKind::kDispatch, std::string(kMuidConstant));
  for (const PlannedMutant* m : arms) dispatch.children.push_back(CaseArm(*m));
  dispatch.children.emplace_back(NodeKind::kDefault, "",
                                 std::vector<Node>{std::move(default_body)});
  return dispatch;
}

// Splices of one module, keyed by (block id, statement index).
struct SiteMutants {
  std::vector<const PlannedMutant*> insertions;
  std::vector<const PlannedMutant*> replacements;
};
using ModuleSites = std::map<std::pair<int, int>, SiteMutants>;

Node Weave(const Node& node, const ModuleSites& sites) {
  Node out = node;
  if (node.kind != NodeKind::kBlock) {
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      out.children[i] = Weave(node.children[i], sites);
    }
    return out;
  }
  out.children.clear();
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    const Node& stmt = node.children[i];
    Node woven = Weave(stmt, sites);
    auto it = sites.find({node.id, static_cast<int>(i)});
    if (it == sites.end()) {
      out.children.push_back(std::move(woven));
      continue;
    }
    if (!it->second.insertions.empty()) {
      out.children.push_back(
          Dispatch(it->second.insertions, Node(NodeKind::kBlock)));
    }
    if (it->second.replacements.empty()) {
      out.children.push_back(std::move(woven));
    } else {
      out.children.push_back(Dispatch(
          it->second.replacements,
          Node(NodeKind::kBlock, "", std::vector<Node>{std::move(woven)})));
    }
  }
  return out;
}

void ResetDirectory(const fs::path& dir) {
  std::error_code ec;
  fs::remove_all(dir, ec);
  if (ec) throw IoError(dir, ec.message());
  fs::create_directories(dir, ec);
  if (ec) throw IoError(dir, ec.message());
}

Project LoadNormalized(const fs::path& project_dir,
                       const GenerationOptions& options) {
  return Normalize(LoadProject(project_dir), options);
}

double SecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

Project Normalize(const Project& project, const GenerationOptions& options) {
  const ProjectFacts facts = CollectFacts(project, options.delay_steps);
  std::vector<Ast> asts = project.asts;

  bool noop_exists = false;
  for (const Ast& ast : asts) {
    noop_exists = noop_exists || FindFunction(ast, kNoopListener) != nullptr;
  }
  const bool wants_noop =
      std::find(options.operators.begin(), options.operators.end(),
                OperatorKind::kBGL) != options.operators.end();

  std::vector<SourceModule> modules;
  for (std::size_t m = 0; m < asts.size(); ++m) {
    if (options.Excluded(project.modules[m].path)) {
      modules.push_back(project.modules[m]);
      continue;
    }
    if (wants_noop && !noop_exists && HasBglSite(asts[m], facts)) {
      asts[m].root.children.emplace_back(
          NodeKind::kFnDecl, std::string(kNoopListener),
          std::vector<Node>{Node(NodeKind::kBlock)});
      noop_exists = true;
    }
    DecomposeDeclarations(asts[m].root, options, facts);
    modules.push_back({project.modules[m].path, Unparse(asts[m])});
  }
  return ParseProject(std::move(modules));
}

WovenProject WeaveSchemata(const Project& normalized,
                           const std::vector<PlannedMutant>& mutants) {
  std::map<int, ModuleSites> sites;
  for (const PlannedMutant& m : mutants) {
    const StatementSplice& s = m.splice;
    SiteMutants& site = sites[s.module_index][{s.block_id, s.index}];
    (s.remove_count == 0 ? site.insertions : site.replacements).push_back(&m);
  }

  std::vector<SourceModule> modules = normalized.modules;
  for (const auto& [module_index, module_sites] : sites) {
    const Node woven = Weave(normalized.asts[module_index].root, module_sites);
    modules[module_index].text = Unparse(woven);
  }

  WovenProject out;
  out.project = ParseProject(std::move(modules));
  for (std::size_t m = 0; m < out.project.asts.size(); ++m) {
    Walk(out.project.asts[m].root, [&](const Node& node, const Node*) {
      if (node.kind == NodeKind::kCase) {
        out.dispatch_index[std::stoll(node.text)] = {static_cast<int>(m), node.id};
      }
    });
  }
  return out;
}

std::vector<SourceModule> MaterializeMutant(const Project& normalized,
                                            const PlannedMutant& mutant) {
  const StatementSplice& s = mutant.splice;
  Ast ast = normalized.asts.at(s.module_index);
  Node* block = FindById(ast.root, s.block_id);
  if (block == nullptr || block->kind != NodeKind::kBlock) {
    throw ContractViolation("splice names no block");
  }
  auto at = block->children.begin() + s.index;
  at = block->children.erase(at, at + s.remove_count);
  block->children.insert(at, s.statements.begin(), s.statements.end());
  std::vector<SourceModule> modules = normalized.modules;
  modules[s.module_index].text = Unparse(ast);
  return modules;
}

MaterializedProjectSet MaterializeTraditional(
    Project& normalized, const GenerationOptions& options,
    const fs::path& base_dir, std::vector<MutationRecord>* records) {
  MaterializedProjectSet set;
  set.base_dir = base_dir;
  ResetDirectory(base_dir);
  std::vector<MutationRecord> generated = ForEachMutant(
      normalized, options,
      [&](const MutationRecord& record, const StatementSplice& splice,
          const Project& mutated) {
        std::vector<SourceModule> modules = mutated.modules;
        modules[splice.module_index].text =
            Unparse(mutated.asts[splice.module_index]);
        WriteModules(base_dir / std::to_string(record.muid), modules);
        set.muids.push_back(record.muid);
      });
  if (records != nullptr) *records = std::move(generated);
  return set;
}

GenerationResult GenerateSchemata(const fs::path& project_dir,
                                  const GenerationOptions& options,
                                  const fs::path& out_dir) {
  const auto start = std::chrono::steady_clock::now();
  const Project normalized = LoadNormalized(project_dir, options);
  const std::vector<PlannedMutant> planned = PlanMutants(normalized, options);
  const WovenProject woven = WeaveSchemata(normalized, planned);

  GenerationResult result;
  for (const PlannedMutant& m : planned) result.records.push_back(m.record);
  result.records = SortedByMuid(std::move(result.records));

  const fs::path dir = out_dir / "schemata";
  ResetDirectory(dir);
  WriteModules(dir, woven.project.modules);
  WriteFile(dir / "MutationInfo.json", MutationInfoJson(result.records));
  result.seconds = SecondsSince(start);
  return result;
}

GenerationResult GenerateTraditional(const fs::path& project_dir,
                                     const GenerationOptions& options,
                                     const fs::path& out_dir) {
  const auto start = std::chrono::steady_clock::now();
  Project normalized = LoadNormalized(project_dir, options);
  ResetDirectory(out_dir / "original");
  WriteModules(out_dir / "original", normalized.modules);

  GenerationResult result;
  const fs::path dir = out_dir / "traditional";
  MaterializeTraditional(normalized, options, dir, &result.records);
  result.records = SortedByMuid(std::move(result.records));
  WriteFile(dir / "MutationInfo.json", MutationInfoJson(result.records));
  result.seconds = SecondsSince(start);
  return result;
}

std::vector<MutationRecord> SortedByMuid(std::vector<MutationRecord> records) {
  std::sort(records.begin(), records.end(),
            [](const MutationRecord& a, const MutationRecord& b) {
              return a.muid < b.muid;
            });
  return records;
}

}  // namespace minimut
