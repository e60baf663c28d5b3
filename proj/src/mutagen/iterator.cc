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

#include "minimut/mutagen/iterator.h"

#include <map>
#include <string_view>

#include "minimut/lang/parser.h"

namespace minimut {

namespace {

// Ancestor chain from the root down to the node with `id`, inclusive.
bool FindPath(Node& node, int id, std::vector<Node*>& path) {
  path.push_back(&node);
  if (node.id == id) return true;
  for (Node& child : node.children) {
    if (FindPath(child, id, path)) return true;
  }
  path.pop_back();
  return false;
}

std::vector<Node*> PathTo(Ast& ast, int id) {
  std::vector<Node*> path;
  if (!FindPath(ast.root, id, path)) {
    throw ContractViolation("no node " + std::to_string(id) + " in module");
  }
  return path;
}

// Index into `path` of the statement that is a direct child of a block.
std::size_t EnclosingStatement(const std::vector<Node*>& path) {
  for (std::size_t i = path.size(); i-- > 1;) {
    if (path[i - 1]->kind == NodeKind::kBlock && IsStatement(path[i]->kind)) {
      return i;
    }
  }
  throw ContractViolation("mutation point outside any statement");
}

int ChildIndex(const Node& parent, const Node* child) {
  return static_cast<int>(child - parent.children.data());
}

// Copy of `root` with the node numbered `id` replaced by `replacement`.
Node ReplaceInCopy(const Node& root, int id, const Node& replacement) {
  if (root.id == id) return replacement;
  Node copy = root;
  for (std::size_t i = 0; i < root.children.size(); ++i) {
    copy.children[i] = ReplaceInCopy(root.children[i], id, replacement);
  }
  return copy;
}

StatementSplice SpliceFor(Ast& ast, int module_index, int node_id,
                          const Alteration& alteration) {
  std::vector<Node*> path = PathTo(ast, node_id);
  StatementSplice splice;
  splice.module_index = module_index;
  switch (alteration.shape) {
    case AlterationShape::kPrependToBody: {
      Node& body = FunctionBody(*path.back());
      splice.block_id = body.id;
      splice.index = 0;
      splice.remove_count = 0;
      splice.statements = alteration.nodes;
      return splice;
    }
    case AlterationShape::kReplaceNode:
    case AlterationShape::kReplaceStatement: {
      const std::size_t s = EnclosingStatement(path);
      const Node& block = *path[s - 1];
      splice.block_id = block.id;
      splice.index = ChildIndex(block, path[s]);
      splice.remove_count = 1;
      if (alteration.shape == AlterationShape::kReplaceNode) {
        splice.statements = {
            ReplaceInCopy(*path[s], node_id, alteration.nodes.at(0))};
      } else {
        splice.statements = alteration.nodes;
      }
      return splice;
    }
  }
  return splice;
}

}  // namespace

bool GenerationOptions::Excluded(const std::string& module_path) const {
  for (const std::string& entry : exclude) {
    if (entry == module_path) return true;
    if (!entry.empty() && entry.back() == '/' &&
        module_path.compare(0, entry.size(), entry) == 0) {
      return true;
    }
  }
  return false;
}

bool IsPointForAny(const std::vector<OperatorKind>& operators, const Node& node,
                   const Node* parent, const ProjectFacts& facts) {
  for (OperatorKind kind : operators) {
    if (IsEligible(kind, node, parent, facts)) return true;
  }
  return false;
}

std::vector<MutationPoint> EnumeratePoints(const Project& project,
                                           const GenerationOptions& options,
                                           const ProjectFacts& facts) {
  std::vector<MutationPoint> points;
  for (std::size_t m = 0; m < project.asts.size(); ++m) {
    if (options.Excluded(project.modules[m].path)) continue;
    const std::vector<int> ids = PreorderPoints(
        project.asts[m], [&](const Node& node, const Node* parent) {
          return IsPointForAny(options.operators, node, parent, facts);
        });
    for (int id : ids) {
      const int p = static_cast<int>(points.size());
      if (p >= options.stride) throw PointOverflow(p, options.stride);
      points.push_back({static_cast<int>(m), id, p});
    }
  }
  return points;
}

MutatorIterator::MutatorIterator(OperatorKind kind, Project& project,
                                 const ProjectFacts& facts, SeededStream& stream,
                                 std::int64_t stride)
    : kind_(kind),
      project_(project),
      facts_(facts),
      stream_(stream),
      stride_(stride) {}

void MutatorIterator::AddPoint(const MutationPoint& point, int first_ordinal) {
  if (applied_) throw ContractViolation("AddPoint() before Restore()");
  Ast& ast = project_.asts.at(point.module_index);
  std::vector<Node*> path = PathTo(ast, point.node_id);
  const Node* parent = path.size() > 1 ? path[path.size() - 2] : nullptr;
  point_ = point;
  first_ordinal_ = first_ordinal;
  queue_ = GenerateMutations(kind_, *path.back(), parent, facts_, stream_);
  next_ = 0;
  splices_.clear();
  for (const Alteration& a : queue_) {
    splices_.push_back(SpliceFor(ast, point.module_index, point.node_id, a));
  }
  last_.reset();
}

bool MutatorIterator::HasMutations() const {
  return point_.has_value() && !applied_ && next_ < queue_.size();
}

MutationRecord MutatorIterator::Mutate() {
  if (applied_) throw ContractViolation("Mutate() twice without Restore()");
  if (!HasMutations()) throw ContractViolation("Mutate() with no mutations left");

  const std::size_t j = next_++;
  const Alteration& alteration = queue_[j];
  const StatementSplice& splice = splices_[j];
  Ast& ast = project_.asts[point_->module_index];
  const SourceModule& module = project_.modules[point_->module_index];

  MutationRecord record;
  record.ordinal = first_ordinal_ + static_cast<int>(j);
  record.muid = AssignMuid(record.ordinal, point_->point_index, stride_);
  record.operator_name = std::string(OperatorName(kind_));
  record.point = *point_;
  record.original_text = alteration.original_text;
  record.replacement_text = alteration.replacement_text;
  record.args = alteration.args;
  record.file = module.path;
  const Node* node = FindById(ast.root, point_->node_id);
  const LineColumn where = LocateOffset(module.text, node->span.begin);
  record.line = where.line;
  record.column = where.column;

  Node* block = FindById(ast.root, splice.block_id);
  auto at = block->children.begin() + splice.index;
  removed_.assign(std::make_move_iterator(at),
                  std::make_move_iterator(at + splice.remove_count));
  at = block->children.erase(at, at + splice.remove_count);
  block->children.insert(at, splice.statements.begin(), splice.statements.end());
  applied_block_ = block;
  applied_ = true;
  last_ = splice;
  return record;
}

void MutatorIterator::Restore() {
  if (!applied_) throw ContractViolation("Restore() without Mutate()");
  const StatementSplice& splice = *last_;
  auto at = applied_block_->children.begin() + splice.index;
  at = applied_block_->children.erase(
      at, at + static_cast<std::ptrdiff_t>(splice.statements.size()));
  applied_block_->children.insert(at, std::make_move_iterator(removed_.begin()),
                                  std::make_move_iterator(removed_.end()));
  removed_.clear();
  applied_block_ = nullptr;
  applied_ = false;
}

const MutationPoint& MutatorIterator::GetMutationPoint() const {
  if (!point_) throw ContractViolation("no mutation point added");
  return *point_;
}

const StatementSplice& MutatorIterator::LastSplice() const {
  if (!last_) throw ContractViolation("LastSplice() before Mutate()");
  return *last_;
}

std::vector<MutationRecord> ForEachMutant(Project& project,
                                          const GenerationOptions& options,
                                          const MutantVisitor& visit) {
  const ProjectFacts facts = CollectFacts(project, options.delay_steps);
  const std::vector<MutationPoint> points =
      EnumeratePoints(project, options, facts);

  std::vector<SeededStream> streams;
  std::vector<MutatorIterator> iterators;
  streams.reserve(options.operators.size());
  iterators.reserve(options.operators.size());
  for (OperatorKind kind : options.operators) {
    streams.emplace_back(options.seed, std::string(OperatorName(kind)));
    iterators.emplace_back(kind, project, facts, streams.back(), options.stride);
  }

  std::vector<MutationRecord> records;
  for (const MutationPoint& point : points) {
    int ordinal = 0;
    for (MutatorIterator& it : iterators) {
      // Looked up afresh: applying and restoring a mutation moves nodes.
      const Node* node = nullptr;
      const Node* parent = nullptr;
      Walk(project.asts[point.module_index].root,
           [&](const Node& n, const Node* p) {
             if (n.id == point.node_id) {
               node = &n;
               parent = p;
             }
           });
      if (!IsEligible(it.kind(), *node, parent, facts)) continue;
      it.AddPoint(point, ordinal);
      while (it.HasMutations()) {
        MutationRecord record = it.Mutate();
        if (visit) visit(record, it.LastSplice(), project);
        it.Restore();
        ordinal = record.ordinal + 1;
        records.push_back(std::move(record));
      }
    }
  }
  return records;
}

std::vector<PlannedMutant> PlanMutants(Project project,
                                       const GenerationOptions& options) {
  std::vector<PlannedMutant> planned;
  ForEachMutant(project, options,
                [&](const MutationRecord& record, const StatementSplice& splice,
                    const Project&) { planned.push_back({record, splice}); });
  return planned;
}

}  // namespace minimut
