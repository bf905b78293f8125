#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "inca/rational.h"

namespace inca::testing {

// Brute-force oracle for  opt sum_{i in objective} x_i  subject to x >= 0,
// sum x = 1 and lo_j <= sum_{i in sel_j} x_i <= hi_j. Bounds are integers
// over a common denominator `scale`.
//
// Worlds with the same membership pattern are merged into one class; the
// optimum is attained at a vertex of the class polytope, whose support has
// at most (rows + 1) classes. Every vertex solves a square system made of
// the normalisation row plus tight bound rows, so enumerating supports and
// tight-row choices and solving by Cramer's rule (with fraction-free
// determinants) visits all of them.
struct OracleRow {
  std::vector<bool> selection;
  std::int64_t lower;
  std::int64_t upper;
};

struct OracleResult {
  bool feasible = false;
  Rational minimum;
  Rational maximum;
};

namespace oracle_detail {

inline std::int64_t determinant(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace oracle_detail

inline OracleResult oracleBounds(std::size_t worlds, const std::vector<OracleRow>& rows,
                                 const std::vector<bool>& objective, std::int64_t scale) {
  // Classes: pattern over rows plus objective.
  std::map<std::vector<bool>, int> class_of;
  std::vector<std::vector<bool>> patterns;
  for (std::size_t w = 0; w < worlds; ++w) {
    std::vector<bool> key;
    for (const auto& r : rows) key.push_back(r.selection[w]);
    key.push_back(objective[w]);
    if (class_of.emplace(key, static_cast<int>(patterns.size())).second) patterns.push_back(key);
  }
  const std::size_t k = patterns.size();
  const std::size_t m = rows.size();

  OracleResult result;
  std::optional<Rational> best_min, best_max;

  auto consider = [&](const std::vector<std::size_t>& support) {
    const std::size_t s = support.size();
    // Choose s - 1 tight rows, each at its lower or upper bound.
    std::vector<std::size_t> chosen;
    auto solve = [&](const std::vector<int>& sides) {
      std::vector<std::vector<std::int64_t>> a(s, std::vector<std::int64_t>(s));
      std::vector<std::int64_t> b(s);
      for (std::size_t c = 0; c < s; ++c) a[0][c] = 1;
      b[0] = scale;
      for (std::size_t t = 0; t + 1 < s; ++t) {
        const auto& row = rows[chosen[t]];
        for (std::size_t c = 0; c < s; ++c) a[t + 1][c] = patterns[support[c]][chosen[t]] ? 1 : 0;
        b[t + 1] = sides[t] ? row.upper : row.lower;
      }
      std::int64_t det = oracle_detail::determinant(a);
      if (det == 0) return;
      std::vector<std::int64_t> num(s);
      for (std::size_t c = 0; c < s; ++c) {
        auto ac = a;
        for (std::size_t r = 0; r < s; ++r) ac[r][c] = b[r];
        num[c] = oracle_detail::determinant(ac);
      }
      if (det < 0) {
        det = -det;
        for (auto& v : num) v = -v;
      }
      // Values are num / (det * scale).
      for (auto v : num) {
        if (v < 0) return;
      }
      for (std::size_t j = 0; j < m; ++j) {
        std::int64_t sum = 0;
        for (std::size_t c = 0; c < s; ++c) {
          if (patterns[support[c]][j]) sum += num[c];
        }
        if (sum < rows[j].lower * det || sum > rows[j].upper * det) return;
      }
      std::int64_t obj = 0;
      for (std::size_t c = 0; c < s; ++c) {
        if (patterns[support[c]][m]) obj += num[c];
      }
      Rational value(mpz_class(static_cast<long>(obj)), mpz_class(static_cast<long>(det * scale)));
      value.canonicalize();
      if (!best_min || value < *best_min) best_min = value;
      if (!best_max || value > *best_max) best_max = value;
    };
    auto pickRows = [&](auto&& self, std::size_t from) -> void {
      if (chosen.size() + 1 == s) {
        const std::size_t t = chosen.size();
        for (std::uint32_t bits = 0; bits < (1u << t); ++bits) {
          std::vector<int> sides(t);
          bool redundant = false;
          for (std::size_t i = 0; i < t; ++i) {
            sides[i] = (bits >> i) & 1;
            if (sides[i] && rows[chosen[i]].lower == rows[chosen[i]].upper) redundant = true;
          }
          if (!redundant) solve(sides);
        }
        return;
      }
      for (std::size_t j = from; j < m; ++j) {
        chosen.push_back(j);
        self(self, j + 1);
        chosen.pop_back();
      }
    };
    pickRows(pickRows, 0);
  };

  std::vector<std::size_t> support;
  auto pickSupport = [&](auto&& self, std::size_t from) -> void {
    if (!support.empty()) consider(support);
    if (support.size() == m + 1) return;
    for (std::size_t c = from; c < k; ++c) {
      support.push_back(c);
      self(self, c + 1);
      support.pop_back();
    }
  };
  pickSupport(pickSupport, 0);

  if (best_min) {
    result.feasible = true;
    result.minimum = *best_min;
    result.maximum = *best_max;
  }
  return result;
}

}  // namespace inca::testing
