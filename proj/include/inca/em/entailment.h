#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "inca/core/formula.h"
#include "inca/core/world.h"
#include "inca/em/knowledge_base.h"
#include "inca/em/simplex.h"
#include "inca/rational.h"

namespace inca::em {

struct EntailmentOptions {
  // Largest atom universe that will be enumerated (2^max_atoms worlds).
  std::size_t max_atoms = 20;
};

// Worlds over an ordered atom universe, encoded as bit masks (bit i set iff
// universe[i] is true), restricted to those conforming to every integrity
// constraint. Enumeration order is binary counting over the universe.
class WorldSpace {
 public:
  // Throws CapacityError when the universe exceeds `max_atoms`.
  WorldSpace(const std::vector<Atom>& universe,
             const std::vector<IntegrityConstraint>& constraints, std::size_t max_atoms);

  std::size_t size() const { return masks_.size(); }
  const std::vector<Atom>& universe() const { return universe_; }
  std::uint32_t mask(std::size_t index) const { return masks_[index]; }
  World world(std::size_t index) const;
  std::vector<World> worlds() const;
  // Index of a conforming world, nullopt if it is not one.
  std::optional<std::size_t> indexOf(const World& world) const;

  // Per-world truth of f, in enumeration order. Throws GroundednessError
  // for non-ground formulas or atoms outside the universe.
  std::vector<bool> evaluate(const Formula& f) const;

  // for(w): the conjunction of w's atoms and the negations of every other
  // universe atom.
  Formula characteristicFormula(std::size_t index) const;

 private:
  std::vector<Atom> universe_;
  std::unordered_map<Atom, std::size_t> position_;
  std::vector<std::uint32_t> masks_;
  std::unordered_map<std::uint32_t, std::size_t> index_;
};

// The linear program over worlds built from a knowledge base: one variable
// per conforming world, one two-sided row per probabilistic formula and the
// normalisation row.
class EntailmentEngine {
 public:
  explicit EntailmentEngine(EMKnowledgeBase kb, EntailmentOptions options = {});

  const EMKnowledgeBase& knowledgeBase() const { return kb_; }
  const WorldSpace& worlds() const { return worlds_; }
  std::span<const LinearRow> rows() const { return rows_; }

  bool isConsistent() const;
  // Optimum of sum_{w |= q} x_w. Throws InconsistentKBError if infeasible.
  Rational minimum(const Formula& q) const;
  Rational maximum(const Formula& q) const;
  // Same as above with the objective given as a world selection.
  Rational optimum(const std::vector<bool>& selection, Objective objective) const;
  ProbabilityInterval bounds(const Formula& q) const;

  // An optimal distribution for the objective (used to sample satisfying
  // distributions). Throws InconsistentKBError if infeasible.
  std::vector<Rational> vertex(std::span<const Rational> cost, Objective objective) const;
  // True iff x is a distribution over the conforming worlds satisfying
  // every probabilistic formula.
  bool satisfiedBy(std::span<const Rational> x) const;

 private:
  EMKnowledgeBase kb_;
  WorldSpace worlds_;
  std::vector<LinearRow> rows_;
};

struct Entailment {
  Rational p;
  Rational eps;
};

std::vector<World> enumerateWorlds(const EMKnowledgeBase& kb, const EntailmentOptions& options = {});
ProbabilityInterval lpBounds(const EMKnowledgeBase& kb, const Formula& q,
                             const EntailmentOptions& options = {});
Entailment maxEntailment(const EMKnowledgeBase& kb, const Formula& q,
                         const EntailmentOptions& options = {});
bool isConsistent(const EMKnowledgeBase& kb, const EntailmentOptions& options = {});

}  // namespace inca::em
