#pragma once

#include <span>
#include <unordered_map>
#include <vector>

#include "inca/am/program.h"

namespace inca::am {

// Forward-chaining closure over a set of ground elements. Facts and
// presumptions act as empty-body rules; strict and defeasible rules fire
// alike.
bool derives(std::span<const AMElement> elements, const Literal& literal);

// True iff the closure contains some literal together with its complement.
bool isContradictory(std::span<const AMElement> elements);

using LiteralId = int;

// Program compiled to integer literals. Literal ids come in complementary
// pairs: id ^ 1 is the complement of id.
class CompiledProgram {
 public:
  explicit CompiledProgram(const AMProgram& program);

  std::size_t literalCount() const { return literals_.size(); }
  const Literal& literal(LiteralId id) const { return literals_.at(static_cast<std::size_t>(id)); }
  // -1 when the literal does not occur in the program.
  LiteralId idOf(const Literal& literal) const;
  static LiteralId complementOf(LiteralId id) { return id ^ 1; }

  LiteralId head(ElementIndex e) const { return heads_[e]; }
  const std::vector<LiteralId>& body(ElementIndex e) const { return bodies_[e]; }

  // Closure of `elements` plus `seeds` (treated as facts). The result is a
  // membership vector indexed by literal id. When `derived_by` is given it
  // receives, per literal, the element that first derived it (-1 for seeds
  // and underived literals).
  std::vector<char> closure(std::span<const ElementIndex> elements,
                            std::span<const LiteralId> seeds = {},
                            std::vector<long>* derived_by = nullptr) const;

  static bool contradictory(const std::vector<char>& closure);

 private:
  std::vector<Literal> literals_;
  std::unordered_map<Literal, LiteralId> ids_;
  std::vector<LiteralId> heads_;
  std::vector<std::vector<LiteralId>> bodies_;
};

}  // namespace inca::am
