#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "inca/core/language.h"

namespace inca {

class World;

// Immutable propositional formula over atoms. Copies share structure.
class Formula {
 public:
  enum class Kind { kTop, kBottom, kAtom, kNot, kAnd, kOr };

  // Default-constructed formula is top.
  Formula();

  static Formula top();
  static Formula bottom();
  static Formula atom(Atom atom);
  static Formula negation(Formula operand);
  // An empty conjunction is top, a singleton collapses to its element.
  static Formula conjunction(std::vector<Formula> operands);
  // An empty disjunction is bottom, a singleton collapses to its element.
  static Formula disjunction(std::vector<Formula> operands);

  Kind kind() const;
  // Valid only for kAtom.
  const Atom& atomValue() const;
  // Operands of kNot (one), kAnd and kOr.
  std::span<const Formula> operands() const;

  bool isGround() const;
  // Distinct atoms in first-occurrence order.
  std::vector<Atom> atoms() const;

  // Knowledge-base syntax: ~ (not), ^ (and), v (or), true, false.
  std::string toString() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

Formula operator!(const Formula& f);
Formula operator&&(const Formula& a, const Formula& b);
Formula operator||(const Formula& a, const Formula& b);

// w |= f by the inductive clauses over atoms, negation, conjunction and
// disjunction; top holds everywhere and bottom nowhere. Throws
// GroundednessError when f contains a variable.
bool satisfies(const World& world, const Formula& formula);

}  // namespace inca
