#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "inca/am/reasoner.h"

namespace inca::am {

enum class Mark { kUndefeated, kDefeated };

// "U" or "D".
const char* markName(Mark mark);

struct DialecticalNode {
  ArgumentId argument = 0;
  // How this node defeats its parent; empty for the root.
  std::optional<DefeatKind> defeat_kind;
  Mark mark = Mark::kUndefeated;
  std::vector<DialecticalNode> children;
};

struct DialecticalTree {
  DialecticalNode root;
};

// Trees for every argument of one literal.
struct DialecticalForest {
  Literal literal;
  std::vector<DialecticalTree> trees;
};

struct LineStep {
  ArgumentId argument;
  std::optional<DefeatKind> defeat_kind;
};

// Restricts the arguments that may appear anywhere in a tree. An empty
// filter admits every argument.
using ArgumentFilter = std::function<bool(ArgumentId)>;

// A line is acceptable when no argument is a subargument of an earlier one,
// the supporting (even) and interfering (odd) arguments are each
// concordant, and a blocking defeater is only ever followed by a proper one.
bool isAcceptableLine(const Reasoner& reasoner, const std::vector<LineStep>& line);

// Exhaustive tree of defeaters rooted at `root`; every root-to-leaf path
// is an acceptable line. The result is already marked.
DialecticalTree buildDialecticalTree(const Reasoner& reasoner, ArgumentId root,
                                     const ArgumentFilter& allowed = {});

// Leaves are U; an inner node is U iff every child is D. Returns the root mark.
Mark markTree(DialecticalTree& tree);

// Root-to-leaf paths.
std::vector<std::vector<LineStep>> linesOf(const DialecticalTree& tree);

DialecticalForest buildForest(const Reasoner& reasoner, const Literal& literal,
                              const ArgumentFilter& allowed = {});

// Some tree root is marked U.
bool warrants(const DialecticalForest& forest);

enum class WarrantStatus { kWarranted, kNotWarranted, kUndecided };

// "warranted", "not warranted", "undecided".
const char* warrantStatusName(WarrantStatus status);

// Throws InternalInconsistencyError if both L and its complement come out
// warranted.
WarrantStatus warrantStatus(const Reasoner& reasoner, const Literal& literal,
                            const ArgumentFilter& allowed = {});

}  // namespace inca::am
