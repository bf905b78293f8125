#include "inca/em/simplex.h"

#include <cstddef>
#include <optional>
#include <stdexcept>

namespace inca::em {
namespace {

// Tableau in canonical form w.r.t. `basis`. The last column is the
// right-hand side; `reduced` holds the reduced costs with the negated
// objective value in its last slot.
struct Tableau {
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> basis;
  std::vector<Rational> reduced;
  std::size_t columns = 0;  // excluding rhs

  Rational& rhs(std::size_t i) { return rows[i][columns]; }

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = rows[r];
    Rational inv = 1 / prow[c];
    for (auto& v : prow) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = 0; j <= columns; ++j) {
        if (prow[j] != 0) rows[i][j] -= f * prow[j];
      }
    }
    if (reduced[c] != 0) {
      Rational f = reduced[c];
      for (std::size_t j = 0; j <= columns; ++j) {
        if (prow[j] != 0) reduced[j] -= f * prow[j];
      }
    }
    basis[r] = c;
  }

  void priceOut(const std::vector<Rational>& cost) {
    reduced.assign(columns + 1, 0);
    for (std::size_t j = 0; j < columns; ++j) reduced[j] = cost[j];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational& cb = cost[basis[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= columns; ++j) {
        if (rows[i][j] != 0) reduced[j] -= cb * rows[i][j];
      }
    }
  }

  // Minimises the priced-out cost. Returns false when unbounded.
  bool optimise(std::size_t usable_columns) {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < usable_columns; ++j) {
        if (reduced[j] < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const Rational& a = rows[i][*entering];
        if (a <= 0) continue;
        Rational ratio = rows[i][columns] / a;
        if (!leaving || ratio < best || (ratio == best && basis[i] < basis[*leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }
};

}  // namespace

LpSolution solveLinearProgram(std::span<const Rational> cost, Objective objective,
                              std::span<const LinearRow> rows) {
  const std::size_t n = cost.size();
  for (const auto& r : rows) {
    if (r.coeffs.size() != n) throw std::invalid_argument("row width does not match cost vector");
    if (r.lower > r.upper) return LpSolution{LpSolution::Status::kInfeasible, 0, {}};
  }

  // Standard form: each two-sided row becomes  a.x - s = lower  and
  // a.x + t = upper; equality rows stay as they are.
  struct StdRow {
    const LinearRow* source;
    Rational rhs;
    int slack_sign;  // 0: none, -1: surplus, +1: slack
  };
  std::vector<StdRow> std_rows;
  for (const auto& r : rows) {
    if (r.lower == r.upper) {
      std_rows.push_back({&r, r.lower, 0});
    } else {
      std_rows.push_back({&r, r.lower, -1});
      std_rows.push_back({&r, r.upper, +1});
    }
  }
  std::size_t slacks = 0;
  for (const auto& s : std_rows) slacks += s.slack_sign != 0;

  const std::size_t m = std_rows.size();
  const std::size_t structural = n + slacks;
  Tableau t;
  t.columns = structural + m;  // one artificial per row
  t.rows.assign(m, std::vector<Rational>(t.columns + 1, 0));
  t.basis.resize(m);
  std::size_t next_slack = n;
  for (std::size_t i = 0; i < m; ++i) {
    auto& row = t.rows[i];
    const auto& s = std_rows[i];
    for (std::size_t j = 0; j < n; ++j) row[j] = s.source->coeffs[j];
    if (s.slack_sign != 0) row[next_slack++] = s.slack_sign;
    row[t.columns] = s.rhs;
    if (s.rhs < 0) {
      for (auto& v : row) v = -v;
    }
    row[structural + i] = 1;
    t.basis[i] = structural + i;
  }

  // Phase 1: minimise the sum of artificials.
  std::vector<Rational> phase1(t.columns, 0);
  for (std::size_t i = 0; i < m; ++i) phase1[structural + i] = 1;
  t.priceOut(phase1);
  t.optimise(t.columns);
  if (-t.reduced[t.columns] != 0) return LpSolution{LpSolution::Status::kInfeasible, 0, {}};

  // Drive artificials out of the basis; rows where that is impossible are
  // linearly dependent on the others and can be dropped.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < structural) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < structural; ++j) {
      if (t.rows[i][j] != 0) {
        col = j;
        break;
      }
    }
    if (col) {
      t.pivot(i, *col);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  // Phase 2 over structural columns only.
  std::vector<Rational> phase2(t.columns, 0);
  for (std::size_t j = 0; j < n; ++j) {
    phase2[j] = objective == Objective::kMinimize ? cost[j] : Rational(-cost[j]);
  }
  t.priceOut(phase2);
  if (!t.optimise(structural)) return LpSolution{LpSolution::Status::kUnbounded, 0, {}};

  LpSolution out;
  out.status = LpSolution::Status::kOptimal;
  out.x.assign(n, 0);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.basis[i] < n) out.x[t.basis[i]] = t.rows[i][t.columns];
  }
  Rational value = 0;
  for (std::size_t j = 0; j < n; ++j) value += cost[j] * out.x[j];
  out.value = value;
  return out;
}

}  // namespace inca::em
