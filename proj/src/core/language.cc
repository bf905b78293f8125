#include "inca/core/language.h"

#include <cctype>
#include <stdexcept>

namespace inca {

Term Term::variable(std::string name) { return Term(Kind::kVariable, std::move(name)); }

Term Term::constant(std::string name) { return Term(Kind::kConstant, std::move(name)); }

Term Term::fromName(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty term name");
  auto first = static_cast<unsigned char>(name.front());
  if (std::isupper(first)) return variable(std::move(name));
  if (std::islower(first) || std::isdigit(first)) return constant(std::move(name));
  throw std::invalid_argument("term name must start with a letter or digit: " + name);
}

bool Atom::isGround() const {
  for (const auto& t : args_) {
    if (t.isVariable()) return false;
  }
  return true;
}

std::string Atom::toString() const {
  std::string out = predicate_;
  if (args_.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < args_.size(); ++i) {
    if (i) out += ',';
    out += args_[i].name();
  }
  out += ')';
  return out;
}

std::string Literal::toString() const {
  return negated_ ? "neg " + atom_.toString() : atom_.toString();
}

Literal complement(const Literal& literal) {
  return Literal(literal.atom(), !literal.negated());
}

std::ostream& operator<<(std::ostream& os, const Term& term) { return os << term.name(); }
std::ostream& operator<<(std::ostream& os, const Atom& atom) { return os << atom.toString(); }
std::ostream& operator<<(std::ostream& os, const Literal& literal) {
  return os << literal.toString();
}

}  // namespace inca

std::size_t std::hash<inca::Atom>::operator()(const inca::Atom& atom) const noexcept {
  std::size_t h = std::hash<std::string>{}(atom.predicate());
  for (const auto& t : atom.args()) {
    h = h * 1000003u ^ std::hash<std::string>{}(t.name()) ^ (t.isVariable() ? 0x9e37u : 0u);
  }
  return h ^ static_cast<std::size_t>(atom.tag());
}

std::size_t std::hash<inca::Literal>::operator()(const inca::Literal& literal) const noexcept {
  return std::hash<inca::Atom>{}(literal.atom()) * 2u + (literal.negated() ? 1u : 0u);
}
