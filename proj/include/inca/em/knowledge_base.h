#pragma once

#include <optional>
#include <string>
#include <vector>

#include "inca/core/formula.h"
#include "inca/core/world.h"
#include "inca/rational.h"

namespace inca::em {

// f : p +- eps, read as  p - eps <= P(f) <= p + eps.
class ProbabilisticFormula {
 public:
  // Throws std::invalid_argument unless 0 <= p <= 1 and
  // 0 <= eps <= min(p, 1 - p).
  ProbabilisticFormula(Formula formula, Rational p, Rational eps);

  const Formula& formula() const { return formula_; }
  const Rational& p() const { return p_; }
  const Rational& eps() const { return eps_; }
  Rational lower() const { return p_ - eps_; }
  Rational upper() const { return p_ + eps_; }

  // "f : p +- eps"
  std::string toString() const;

  friend bool operator==(const ProbabilisticFormula&, const ProbabilisticFormula&) = default;

 private:
  Formula formula_;
  Rational p_;
  Rational eps_;
};

// oneOf(atoms): a conforming world contains at most one of the atoms.
class IntegrityConstraint {
 public:
  // Requires at least two distinct ground atoms.
  explicit IntegrityConstraint(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  bool conforms(const World& world) const;

  std::string toString() const;

  friend bool operator==(const IntegrityConstraint&, const IntegrityConstraint&) = default;

 private:
  std::vector<Atom> atoms_;
};

class EMKnowledgeBase {
 public:
  EMKnowledgeBase() = default;
  // The atom universe is every atom mentioned by the formulas and
  // constraints (first-occurrence order) unless `universe` is given, in
  // which case it must cover them (GroundednessError otherwise).
  EMKnowledgeBase(std::vector<ProbabilisticFormula> formulas,
                  std::vector<IntegrityConstraint> constraints = {},
                  std::optional<std::vector<Atom>> universe = std::nullopt);

  const std::vector<ProbabilisticFormula>& formulas() const { return formulas_; }
  const std::vector<IntegrityConstraint>& constraints() const { return constraints_; }
  const std::vector<Atom>& universe() const { return universe_; }
  bool explicitUniverse() const { return explicit_universe_; }
  bool inUniverse(const Atom& atom) const;

  // Copy with `atoms` appended to the universe (already-present atoms are
  // skipped).
  EMKnowledgeBase withAtoms(const std::vector<Atom>& atoms) const;
  // Copy with extra formulas; their atoms join the universe.
  EMKnowledgeBase withFormulas(const std::vector<ProbabilisticFormula>& extra) const;

 private:
  std::vector<ProbabilisticFormula> formulas_;
  std::vector<IntegrityConstraint> constraints_;
  std::vector<Atom> universe_;
  bool explicit_universe_ = false;
};

// Closed probability interval [lower, upper], reported as p +- eps with
// eps = (upper - lower) / 2 and p = lower + eps.
struct ProbabilityInterval {
  Rational lower;
  Rational upper;

  Rational eps() const { return (upper - lower) / 2; }
  Rational p() const { return lower + eps(); }
  bool contains(const ProbabilityInterval& other) const {
    return lower <= other.lower && other.upper <= upper;
  }
  // "p +- eps"
  std::string toString() const;

  friend bool operator==(const ProbabilityInterval&, const ProbabilityInterval&) = default;
};

}  // namespace inca::em
