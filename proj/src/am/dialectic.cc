#include "inca/am/dialectic.h"

#include "inca/errors.h"

namespace inca::am {

const char* markName(Mark mark) { return mark == Mark::kUndefeated ? "U" : "D"; }

const char* warrantStatusName(WarrantStatus status) {
  switch (status) {
    case WarrantStatus::kWarranted:
      return "warranted";
    case WarrantStatus::kNotWarranted:
      return "not warranted";
    case WarrantStatus::kUndecided:
      return "undecided";
  }
  return "?";
}

namespace {

// Checks only what appending `next` to an acceptable `line` can violate.
bool canExtend(const Reasoner& reasoner, const std::vector<LineStep>& line, const LineStep& next) {
  for (const auto& step : line) {
    if (reasoner.isSubargument(next.argument, step.argument)) return false;
  }
  if (!line.empty() && line.back().defeat_kind == DefeatKind::kBlocking &&
      next.defeat_kind != DefeatKind::kProper) {
    return false;
  }
  std::vector<ArgumentId> same_side{next.argument};
  for (std::size_t i = line.size() % 2 == 0 ? 0 : 1; i < line.size(); i += 2) {
    same_side.push_back(line[i].argument);
  }
  return reasoner.concordant(same_side);
}

void grow(const Reasoner& reasoner, const ArgumentFilter& allowed, DialecticalNode& node,
          std::vector<LineStep>& line) {
  for (const auto& d : reasoner.defeaters(node.argument)) {
    if (allowed && !allowed(d.argument)) continue;
    LineStep step{d.argument, d.kind};
    if (!canExtend(reasoner, line, step)) continue;
    DialecticalNode child;
    child.argument = d.argument;
    child.defeat_kind = d.kind;
    line.push_back(step);
    grow(reasoner, allowed, child, line);
    line.pop_back();
    node.children.push_back(std::move(child));
  }
}

Mark markNode(DialecticalNode& node) {
  bool any_undefeated = false;
  for (auto& child : node.children) {
    if (markNode(child) == Mark::kUndefeated) any_undefeated = true;
  }
  node.mark = any_undefeated ? Mark::kDefeated : Mark::kUndefeated;
  return node.mark;
}

void collectLines(const DialecticalNode& node, std::vector<LineStep>& prefix,
                  std::vector<std::vector<LineStep>>& out) {
  prefix.push_back({node.argument, node.defeat_kind});
  if (node.children.empty()) {
    out.push_back(prefix);
  } else {
    for (const auto& child : node.children) collectLines(child, prefix, out);
  }
  prefix.pop_back();
}

}  // namespace

bool isAcceptableLine(const Reasoner& reasoner, const std::vector<LineStep>& line) {
  std::vector<LineStep> prefix;
  for (const auto& step : line) {
    if (!canExtend(reasoner, prefix, step)) return false;
    prefix.push_back(step);
  }
  return true;
}

DialecticalTree buildDialecticalTree(const Reasoner& reasoner, ArgumentId root,
                                     const ArgumentFilter& allowed) {
  DialecticalTree tree;
  tree.root.argument = root;
  std::vector<LineStep> line{{root, std::nullopt}};
  grow(reasoner, allowed, tree.root, line);
  markTree(tree);
  return tree;
}

Mark markTree(DialecticalTree& tree) { return markNode(tree.root); }

std::vector<std::vector<LineStep>> linesOf(const DialecticalTree& tree) {
  std::vector<std::vector<LineStep>> out;
  std::vector<LineStep> prefix;
  collectLines(tree.root, prefix, out);
  return out;
}

DialecticalForest buildForest(const Reasoner& reasoner, const Literal& literal,
                              const ArgumentFilter& allowed) {
  DialecticalForest forest{literal, {}};
  for (ArgumentId a : reasoner.argumentsFor(literal)) {
    if (allowed && !allowed(a)) continue;
    forest.trees.push_back(buildDialecticalTree(reasoner, a, allowed));
  }
  return forest;
}

bool warrants(const DialecticalForest& forest) {
  for (const auto& t : forest.trees) {
    if (t.root.mark == Mark::kUndefeated) return true;
  }
  return false;
}

WarrantStatus warrantStatus(const Reasoner& reasoner, const Literal& literal,
                            const ArgumentFilter& allowed) {
  bool yes = warrants(buildForest(reasoner, literal, allowed));
  bool no = warrants(buildForest(reasoner, complement(literal), allowed));
  if (yes && no) {
    throw InternalInconsistencyError("both " + literal.toString() + " and its complement are warranted");
  }
  if (yes) return WarrantStatus::kWarranted;
  if (no) return WarrantStatus::kNotWarranted;
  return WarrantStatus::kUndecided;
}

}  // namespace inca::am
