#include "inca/em/entailment.h"

#include <stdexcept>

#include "inca/errors.h"

namespace inca::em {
namespace {

bool evaluateMask(const Formula& f, std::uint32_t mask,
                  const std::unordered_map<Atom, std::size_t>& position) {
  switch (f.kind()) {
    case Formula::Kind::kTop:
      return true;
    case Formula::Kind::kBottom:
      return false;
    case Formula::Kind::kAtom:
      return (mask >> position.at(f.atomValue())) & 1u;
    case Formula::Kind::kNot:
      return !evaluateMask(f.operands().front(), mask, position);
    case Formula::Kind::kAnd:
      for (const auto& op : f.operands()) {
        if (!evaluateMask(op, mask, position)) return false;
      }
      return true;
    case Formula::Kind::kOr:
      for (const auto& op : f.operands()) {
        if (evaluateMask(op, mask, position)) return true;
      }
      return false;
  }
  return false;
}

}  // namespace

WorldSpace::WorldSpace(const std::vector<Atom>& universe,
                       const std::vector<IntegrityConstraint>& constraints,
                       std::size_t max_atoms)
    : universe_(universe) {
  if (universe_.size() > max_atoms || universe_.size() > 31) {
    throw CapacityError("atom universe has " + std::to_string(universe_.size()) +
                            " atoms, too many to enumerate worlds",
                        std::min<std::size_t>(max_atoms, 31));
  }
  for (std::size_t i = 0; i < universe_.size(); ++i) position_.emplace(universe_[i], i);

  std::vector<std::uint32_t> constraint_masks;
  for (const auto& c : constraints) {
    std::uint32_t m = 0;
    for (const auto& a : c.atoms()) {
      auto it = position_.find(a);
      if (it == position_.end()) {
        throw GroundednessError("oneOf atom " + a.toString() + " is not in the universe");
      }
      m |= 1u << it->second;
    }
    constraint_masks.push_back(m);
  }

  const std::uint64_t total = std::uint64_t{1} << universe_.size();
  for (std::uint64_t k = 0; k < total; ++k) {
    auto mask = static_cast<std::uint32_t>(k);
    bool ok = true;
    for (auto cm : constraint_masks) {
      std::uint32_t hit = mask & cm;
      if (hit & (hit - 1)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      index_.emplace(mask, masks_.size());
      masks_.push_back(mask);
    }
  }
}

World WorldSpace::world(std::size_t index) const {
  std::vector<Atom> atoms;
  std::uint32_t m = masks_.at(index);
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    if ((m >> i) & 1u) atoms.push_back(universe_[i]);
  }
  return World(std::move(atoms));
}

std::vector<World> WorldSpace::worlds() const {
  std::vector<World> out;
  out.reserve(masks_.size());
  for (std::size_t i = 0; i < masks_.size(); ++i) out.push_back(world(i));
  return out;
}

std::optional<std::size_t> WorldSpace::indexOf(const World& world) const {
  std::uint32_t m = 0;
  for (const auto& a : world.atoms()) {
    auto it = position_.find(a);
    if (it == position_.end()) return std::nullopt;
    m |= 1u << it->second;
  }
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<bool> WorldSpace::evaluate(const Formula& f) const {
  if (!f.isGround()) throw GroundednessError("query must be ground: " + f.toString());
  for (const auto& a : f.atoms()) {
    if (!position_.count(a)) {
      throw GroundednessError("atom " + a.toString() + " is outside the atom universe");
    }
  }
  std::vector<bool> out(masks_.size());
  for (std::size_t i = 0; i < masks_.size(); ++i) out[i] = evaluateMask(f, masks_[i], position_);
  return out;
}

Formula WorldSpace::characteristicFormula(std::size_t index) const {
  std::vector<Formula> conj;
  std::uint32_t m = masks_.at(index);
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    if ((m >> i) & 1u) conj.push_back(Formula::atom(universe_[i]));
  }
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    if (!((m >> i) & 1u)) conj.push_back(!Formula::atom(universe_[i]));
  }
  return Formula::conjunction(std::move(conj));
}

EntailmentEngine::EntailmentEngine(EMKnowledgeBase kb, EntailmentOptions options)
    : kb_(std::move(kb)), worlds_(kb_.universe(), kb_.constraints(), options.max_atoms) {
  const std::size_t n = worlds_.size();
  for (const auto& pf : kb_.formulas()) {
    auto sel = worlds_.evaluate(pf.formula());
    LinearRow row;
    row.coeffs.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) row.coeffs[i] = sel[i] ? 1 : 0;
    row.lower = pf.lower();
    row.upper = pf.upper();
    rows_.push_back(std::move(row));
  }
  rows_.push_back(LinearRow{std::vector<Rational>(n, 1), 1, 1});
}

bool EntailmentEngine::isConsistent() const {
  std::vector<Rational> zero(worlds_.size(), 0);
  return solveLinearProgram(zero, Objective::kMinimize, rows_).optimal();
}

Rational EntailmentEngine::optimum(const std::vector<bool>& selection,
                                   Objective objective) const {
  std::vector<Rational> cost(worlds_.size(), 0);
  for (std::size_t i = 0; i < cost.size(); ++i) cost[i] = selection.at(i) ? 1 : 0;
  auto sol = solveLinearProgram(cost, objective, rows_);
  if (!sol.optimal()) throw InconsistentKBError("environmental knowledge base is inconsistent");
  return sol.value;
}

Rational EntailmentEngine::minimum(const Formula& q) const {
  return optimum(worlds_.evaluate(q), Objective::kMinimize);
}

Rational EntailmentEngine::maximum(const Formula& q) const {
  return optimum(worlds_.evaluate(q), Objective::kMaximize);
}

ProbabilityInterval EntailmentEngine::bounds(const Formula& q) const {
  auto sel = worlds_.evaluate(q);
  return ProbabilityInterval{optimum(sel, Objective::kMinimize),
                             optimum(sel, Objective::kMaximize)};
}

std::vector<Rational> EntailmentEngine::vertex(std::span<const Rational> cost,
                                               Objective objective) const {
  auto sol = solveLinearProgram(cost, objective, rows_);
  if (!sol.optimal()) throw InconsistentKBError("environmental knowledge base is inconsistent");
  return sol.x;
}

bool EntailmentEngine::satisfiedBy(std::span<const Rational> x) const {
  if (x.size() != worlds_.size()) return false;
  for (const auto& v : x) {
    if (v < 0) return false;
  }
  for (const auto& row : rows_) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += row.coeffs[i] * x[i];
    if (s < row.lower || s > row.upper) return false;
  }
  return true;
}

std::vector<World> enumerateWorlds(const EMKnowledgeBase& kb, const EntailmentOptions& options) {
  return WorldSpace(kb.universe(), kb.constraints(), options.max_atoms).worlds();
}

ProbabilityInterval lpBounds(const EMKnowledgeBase& kb, const Formula& q,
                             const EntailmentOptions& options) {
  return EntailmentEngine(kb, options).bounds(q);
}

Entailment maxEntailment(const EMKnowledgeBase& kb, const Formula& q,
                         const EntailmentOptions& options) {
  auto iv = lpBounds(kb, q, options);
  return Entailment{iv.p(), iv.eps()};
}

bool isConsistent(const EMKnowledgeBase& kb, const EntailmentOptions& options) {
  return EntailmentEngine(kb, options).isConsistent();
}

}  // namespace inca::em
