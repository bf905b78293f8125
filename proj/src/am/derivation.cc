#include "inca/am/derivation.h"

#include <set>

namespace inca::am {

namespace {

std::set<Literal> closureOf(std::span<const AMElement> elements) {
  std::set<Literal> known;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& e : elements) {
      if (known.count(e.head)) continue;
      bool ready = true;
      for (const auto& b : e.body) {
        if (!known.count(b)) {
          ready = false;
          break;
        }
      }
      if (ready) {
        known.insert(e.head);
        changed = true;
      }
    }
  }
  return known;
}

}  // namespace

bool derives(std::span<const AMElement> elements, const Literal& literal) {
  return closureOf(elements).count(literal) > 0;
}

bool isContradictory(std::span<const AMElement> elements) {
  auto known = closureOf(elements);
  for (const auto& l : known) {
    if (!l.negated() && known.count(complement(l))) return true;
  }
  return false;
}

CompiledProgram::CompiledProgram(const AMProgram& program) {
  auto intern = [this](const Literal& l) {
    Literal positive(l.atom(), false);
    auto it = ids_.find(positive);
    LiteralId base;
    if (it == ids_.end()) {
      base = static_cast<LiteralId>(literals_.size());
      literals_.push_back(positive);
      literals_.push_back(complement(positive));
      ids_.emplace(literals_[base], base);
      ids_.emplace(literals_[base + 1], base + 1);
    } else {
      base = it->second;
    }
    return base + (l.negated() ? 1 : 0);
  };
  heads_.reserve(program.size());
  bodies_.reserve(program.size());
  for (const auto& e : program.elements()) {
    heads_.push_back(intern(e.head));
    std::vector<LiteralId> body;
    for (const auto& b : e.body) body.push_back(intern(b));
    bodies_.push_back(std::move(body));
  }
}

LiteralId CompiledProgram::idOf(const Literal& literal) const {
  auto it = ids_.find(literal);
  return it == ids_.end() ? -1 : it->second;
}

std::vector<char> CompiledProgram::closure(std::span<const ElementIndex> elements,
                                           std::span<const LiteralId> seeds,
                                           std::vector<long>* derived_by) const {
  std::vector<char> known(literals_.size(), 0);
  if (derived_by) derived_by->assign(literals_.size(), -1);
  for (auto s : seeds) known[static_cast<std::size_t>(s)] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto e : elements) {
      auto h = static_cast<std::size_t>(heads_[e]);
      if (known[h]) continue;
      bool ready = true;
      for (auto b : bodies_[e]) {
        if (!known[static_cast<std::size_t>(b)]) {
          ready = false;
          break;
        }
      }
      if (ready) {
        known[h] = 1;
        if (derived_by) (*derived_by)[h] = static_cast<long>(e);
        changed = true;
      }
    }
  }
  return known;
}

bool CompiledProgram::contradictory(const std::vector<char>& closure) {
  for (std::size_t i = 0; i + 1 < closure.size(); i += 2) {
    if (closure[i] && closure[i + 1]) return true;
  }
  return false;
}

}  // namespace inca::am
