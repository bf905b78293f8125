#pragma once

#include <optional>
#include <string>
#include <vector>

#include "inca/am/program.h"
#include "inca/core/formula.h"
#include "inca/core/grounding.h"
#include "inca/rational.h"

namespace inca::io {

struct SourceLocation {
  int line = 0;
  int column = 0;
};

struct EMStatement {
  Formula formula;
  Rational p;
  Rational eps;
  SourceLocation location;
};

struct ICStatement {
  std::vector<Atom> atoms;
  SourceLocation location;
};

// A possibly schematic element; guards only appear on rules.
struct AMStatement {
  std::string label;
  am::ElementKind kind = am::ElementKind::kFact;
  RuleShape shape;
  SourceLocation location;
};

struct AFStatement {
  std::string label;
  Formula formula;
  SourceLocation location;
};

// `actor a, b.` / `operation o.` / `constant c.` (role plain).
struct SortStatement {
  Role role = Role::kPlain;
  std::vector<std::string> constants;
  SourceLocation location;
};

// Parsed knowledge-base text, before grounding. Equality ignores source
// locations.
struct KBDocument {
  std::vector<EMStatement> em;
  std::vector<ICStatement> ic;
  std::vector<AMStatement> am;
  std::vector<AFStatement> af;
  std::vector<SortStatement> sorts;
  // Explicit environmental atom universe (`#universe`), if any.
  std::optional<std::vector<Atom>> universe;

  bool empty() const {
    return em.empty() && ic.empty() && am.empty() && af.empty() && sorts.empty() && !universe;
  }
};

bool operator==(const KBDocument& a, const KBDocument& b);

}  // namespace inca::io
