#include "inca/core/world.h"

#include <algorithm>

namespace inca {

World::World(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
}

bool World::contains(const Atom& atom) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), atom);
}

std::string World::toString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i) out += ", ";
    out += atoms_[i].toString();
  }
  out += '}';
  return out;
}

}  // namespace inca
