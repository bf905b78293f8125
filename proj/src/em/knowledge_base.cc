#include "inca/em/knowledge_base.h"

#include <algorithm>
#include <stdexcept>

#include "inca/errors.h"

namespace inca::em {

ProbabilisticFormula::ProbabilisticFormula(Formula formula, Rational p, Rational eps)
    : formula_(std::move(formula)), p_(std::move(p)), eps_(std::move(eps)) {
  if (p_ < 0 || p_ > 1) {
    throw std::invalid_argument("probability " + formatRational(p_) + " outside [0,1]");
  }
  Rational cap = std::min<Rational>(p_, 1 - p_);
  if (eps_ < 0 || eps_ > cap) {
    throw std::invalid_argument("tolerance " + formatRational(eps_) + " outside [0, " +
                                formatRational(cap) + "] for p = " + formatRational(p_));
  }
  if (!formula_.isGround()) {
    throw GroundednessError("probabilistic formula must be ground: " + formula_.toString());
  }
}

std::string ProbabilisticFormula::toString() const {
  return formula_.toString() + " : " + formatRational(p_) + " +- " + formatRational(eps_);
}

IntegrityConstraint::IntegrityConstraint(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  std::vector<Atom> sorted = atoms_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("oneOf lists an atom twice");
  }
  if (atoms_.size() < 2) throw std::invalid_argument("oneOf needs at least two atoms");
  for (const auto& a : atoms_) {
    if (!a.isGround()) throw GroundednessError("oneOf atom must be ground: " + a.toString());
  }
}

bool IntegrityConstraint::conforms(const World& world) const {
  std::size_t hits = 0;
  for (const auto& a : atoms_) hits += world.contains(a);
  return hits <= 1;
}

std::string IntegrityConstraint::toString() const {
  std::string out = "oneOf{";
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i) out += ", ";
    out += atoms_[i].toString();
  }
  return out + "}";
}

namespace {

void appendNew(std::vector<Atom>& universe, const std::vector<Atom>& atoms) {
  for (const auto& a : atoms) {
    if (std::find(universe.begin(), universe.end(), a) == universe.end()) universe.push_back(a);
  }
}

}  // namespace

EMKnowledgeBase::EMKnowledgeBase(std::vector<ProbabilisticFormula> formulas,
                                 std::vector<IntegrityConstraint> constraints,
                                 std::optional<std::vector<Atom>> universe)
    : formulas_(std::move(formulas)), constraints_(std::move(constraints)) {
  std::vector<Atom> mentioned;
  for (const auto& f : formulas_) appendNew(mentioned, f.formula().atoms());
  for (const auto& c : constraints_) appendNew(mentioned, c.atoms());
  if (universe) {
    explicit_universe_ = true;
    appendNew(universe_, *universe);
    for (const auto& a : mentioned) {
      if (!inUniverse(a)) {
        throw GroundednessError("atom " + a.toString() + " is not in the declared universe");
      }
    }
  } else {
    universe_ = std::move(mentioned);
  }
}

bool EMKnowledgeBase::inUniverse(const Atom& atom) const {
  return std::find(universe_.begin(), universe_.end(), atom) != universe_.end();
}

EMKnowledgeBase EMKnowledgeBase::withAtoms(const std::vector<Atom>& atoms) const {
  EMKnowledgeBase out = *this;
  appendNew(out.universe_, atoms);
  return out;
}

EMKnowledgeBase EMKnowledgeBase::withFormulas(
    const std::vector<ProbabilisticFormula>& extra) const {
  EMKnowledgeBase out = *this;
  for (const auto& f : extra) {
    out.formulas_.push_back(f);
    appendNew(out.universe_, f.formula().atoms());
  }
  return out;
}

std::string ProbabilityInterval::toString() const {
  return formatRational(p()) + " +- " + formatRational(eps());
}

}  // namespace inca::em
