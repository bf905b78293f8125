#pragma once

#include <compare>
#include <string>
#include <vector>

#include "inca/core/language.h"

namespace inca {

// A set of ground atoms taken as true; everything else is false.
class World {
 public:
  World() = default;
  // Sorts and deduplicates.
  explicit World(std::vector<Atom> atoms);

  bool contains(const Atom& atom) const;
  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }

  // "{a, b(c)}" in sorted order; "{}" for the empty world.
  std::string toString() const;

  friend bool operator==(const World&, const World&) = default;
  friend auto operator<=>(const World&, const World&) = default;

 private:
  std::vector<Atom> atoms_;
};

}  // namespace inca
