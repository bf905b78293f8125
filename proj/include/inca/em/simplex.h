#pragma once

#include <span>
#include <vector>

#include "inca/rational.h"

namespace inca::em {

// lower <= coeffs . x <= upper; lower == upper makes an equality row.
struct LinearRow {
  std::vector<Rational> coeffs;
  Rational lower;
  Rational upper;
};

enum class Objective { kMinimize, kMaximize };

struct LpSolution {
  enum class Status { kOptimal, kInfeasible, kUnbounded };
  Status status = Status::kInfeasible;
  Rational value;
  std::vector<Rational> x;

  bool optimal() const { return status == Status::kOptimal; }
};

// Solves  opt cost . x  s.t. rows, x >= 0  exactly over the rationals with
// a dense two-phase tableau simplex. Pivoting follows Bland's rule, so the
// method terminates on degenerate problems.
LpSolution solveLinearProgram(std::span<const Rational> cost, Objective objective,
                              std::span<const LinearRow> rows);

}  // namespace inca::em
