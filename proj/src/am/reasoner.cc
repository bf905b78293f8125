#include "inca/am/reasoner.h"

#include <algorithm>
#include <stdexcept>

#include "inca/errors.h"

namespace inca::am {

const char* defeatKindName(DefeatKind kind) {
  return kind == DefeatKind::kProper ? "proper" : "blocking";
}

namespace {

using Support = std::vector<ElementIndex>;

Support unite(const Support& a, const Support& b) {
  Support out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool subset(const Support& small, const Support& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Inserts `candidate` into an antichain of minimal sets. Returns true when
// the family changed.
bool insertMinimal(std::vector<Support>& family, const Support& candidate) {
  for (const auto& s : family) {
    if (subset(s, candidate)) return false;
  }
  std::erase_if(family, [&](const Support& s) { return subset(candidate, s); });
  family.push_back(candidate);
  return true;
}

}  // namespace

Reasoner::Reasoner(AMProgram program, ReasonerOptions options)
    : program_(std::move(program)), options_(options), compiled_(program_) {
  for (ElementIndex i = 0; i < program_.size(); ++i) {
    if (!program_.element(i).isDefeasible()) strict_part_.push_back(i);
  }
  if (CompiledProgram::contradictory(compiled_.closure(strict_part_))) {
    throw std::invalid_argument("facts and strict rules derive contradictory literals");
  }

  std::vector<ElementIndex> all(program_.size());
  for (ElementIndex i = 0; i < all.size(); ++i) all[i] = i;
  auto known = compiled_.closure(all);
  for (std::size_t l = 0; l < known.size(); ++l) {
    if (known[l]) derivable_.push_back(static_cast<LiteralId>(l));
  }

  buildArguments();

  const std::size_t n = arguments_.size();
  subarguments_.assign(n, {});
  for (ArgumentId a = 0; a < n; ++a) {
    for (ArgumentId b = 0; b < n; ++b) {
      if (subset(arguments_[b].support, arguments_[a].support)) subarguments_[a].push_back(b);
    }
  }
  attackers_.assign(n, {});
  for (ArgumentId target = 0; target < n; ++target) {
    for (ArgumentId attacker = 0; attacker < n; ++attacker) {
      if (attacks(attacker, target)) attackers_[target].push_back(attacker);
    }
  }
}

void Reasoner::buildArguments() {
  const std::size_t literal_count = compiled_.literalCount();
  std::vector<std::vector<Support>> minimal(literal_count);

  // Least fixpoint of minimal defeasible supports per literal.
  bool changed = true;
  while (changed) {
    changed = false;
    for (ElementIndex e = 0; e < program_.size(); ++e) {
      const auto& elem = program_.element(e);
      std::vector<Support> partial{elem.isDefeasible() ? Support{e} : Support{}};
      for (auto b : compiled_.body(e)) {
        const auto& options = minimal[static_cast<std::size_t>(b)];
        std::vector<Support> next;
        for (const auto& p : partial) {
          for (const auto& s : options) insertMinimal(next, unite(p, s));
        }
        partial = std::move(next);
        if (partial.empty()) break;
      }
      auto& family = minimal[static_cast<std::size_t>(compiled_.head(e))];
      for (const auto& p : partial) changed |= insertMinimal(family, p);
    }
  }

  std::vector<LiteralId> order;
  for (ElementIndex e = 0; e < program_.size(); ++e) {
    LiteralId h = compiled_.head(e);
    if (std::find(order.begin(), order.end(), h) == order.end()) order.push_back(h);
  }

  for (LiteralId lit : order) {
    auto family = minimal[static_cast<std::size_t>(lit)];
    std::sort(family.begin(), family.end());
    for (const auto& defeasible : family) {
      std::vector<ElementIndex> usable = unite(strict_part_, defeasible);
      std::vector<long> derived_by;
      auto known = compiled_.closure(usable, {}, &derived_by);
      if (CompiledProgram::contradictory(known)) continue;

      // Walk the first-found derivation back from the conclusion to record
      // the facts and strict rules it relies on.
      Support used = defeasible;
      std::vector<LiteralId> stack{lit};
      std::vector<char> seen(literal_count, 0);
      while (!stack.empty()) {
        LiteralId l = stack.back();
        stack.pop_back();
        if (seen[static_cast<std::size_t>(l)]) continue;
        seen[static_cast<std::size_t>(l)] = 1;
        long by = derived_by[static_cast<std::size_t>(l)];
        if (by < 0) throw std::logic_error("argument derivation lost its trace");
        auto e = static_cast<ElementIndex>(by);
        if (!std::binary_search(used.begin(), used.end(), e)) {
          used.insert(std::upper_bound(used.begin(), used.end(), e), e);
        }
        for (auto b : compiled_.body(e)) stack.push_back(b);
      }

      ArgumentId id = arguments_.size();
      arguments_.push_back(Argument{std::move(used), defeasible, compiled_.literal(lit)});
      by_conclusion_.emplace(lit, id);
    }
  }
}

std::vector<ArgumentId> Reasoner::argumentsFor(const Literal& literal) const {
  std::vector<ArgumentId> out;
  LiteralId id = compiled_.idOf(literal);
  if (id < 0) return out;
  auto [lo, hi] = by_conclusion_.equal_range(id);
  for (auto it = lo; it != hi; ++it) out.push_back(it->second);
  std::sort(out.begin(), out.end());
  return out;
}

std::string Reasoner::label(ArgumentId id) const { return "A" + std::to_string(id + 1); }

std::string Reasoner::describe(ArgumentId id) const {
  const auto& a = arguments_.at(id);
  std::string out = "<{";
  for (std::size_t i = 0; i < a.support.size(); ++i) {
    if (i) out += ", ";
    out += program_.element(a.support[i]).id;
  }
  return out + "}, " + a.conclusion.toString() + ">";
}

std::vector<ElementIndex> Reasoner::ofKind(const Argument& a, ElementKind kind) const {
  std::vector<ElementIndex> out;
  for (auto e : a.support) {
    if (program_.element(e).kind == kind) out.push_back(e);
  }
  return out;
}

std::vector<ElementIndex> Reasoner::strictOf(const Argument& a) const {
  std::vector<ElementIndex> out;
  for (auto e : a.support) {
    if (!program_.element(e).isDefeasible()) out.push_back(e);
  }
  return out;
}

bool Reasoner::isPresumptive(ArgumentId id) const {
  return !ofKind(arguments_.at(id), ElementKind::kPresumption).empty();
}

bool Reasoner::isSubargument(ArgumentId b, ArgumentId a) const {
  return subset(arguments_.at(b).support, arguments_.at(a).support);
}

bool Reasoner::attacks(ArgumentId attacker, ArgumentId target) const {
  const auto& a1 = arguments_.at(target);
  const auto& a2 = arguments_.at(attacker);
  // Omega(A1) u Omega(A2) u Theta(A1) u Theta(A2), closed strictly with the
  // attacker's conclusion and the sub-argument's conclusion as facts.
  auto rules = unite(strictOf(a1), strictOf(a2));
  LiteralId l2 = compiled_.idOf(a2.conclusion);
  for (ArgumentId sub : subarguments_.at(target)) {
    LiteralId l_sub = compiled_.idOf(arguments_[sub].conclusion);
    LiteralId seeds[] = {l2, l_sub};
    if (CompiledProgram::contradictory(compiled_.closure(rules, seeds))) return true;
  }
  return false;
}

bool Reasoner::prefersPS(ArgumentId a1, ArgumentId a2) const {
  {
    std::lock_guard lock(memo_mutex_);
    auto it = ps_memo_.find({a1, a2});
    if (it != ps_memo_.end()) return it->second;
  }
  if (derivable_.size() > options_.max_activation_literals) {
    throw CapacityError("generalized specificity over " + std::to_string(derivable_.size()) +
                            " derivable literals",
                        options_.max_activation_literals);
  }

  const auto& arg1 = arguments_.at(a1);
  const auto& arg2 = arguments_.at(a2);
  const auto strict = unite(ofKind(arg1, ElementKind::kStrictRule),
                            ofKind(arg2, ElementKind::kStrictRule));
  const auto with1 = unite(strict, ofKind(arg1, ElementKind::kDefeasibleRule));
  const auto with2 = unite(strict, ofKind(arg2, ElementKind::kDefeasibleRule));
  const auto l1 = static_cast<std::size_t>(compiled_.idOf(arg1.conclusion));
  const auto l2 = static_cast<std::size_t>(compiled_.idOf(arg2.conclusion));

  bool witness = false;
  bool violated = false;
  const std::size_t f = derivable_.size();
  std::vector<LiteralId> h;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f) && !violated; ++mask) {
    h.clear();
    for (std::size_t i = 0; i < f; ++i) {
      if ((mask >> i) & 1u) h.push_back(derivable_[i]);
    }
    auto base = compiled_.closure(strict, h);
    if (CompiledProgram::contradictory(base)) continue;
    auto c1 = compiled_.closure(with1, h);
    auto c2 = compiled_.closure(with2, h);
    // Condition 1: whenever H activates A1 non-trivially, it activates A2.
    if (c1[l1] && !base[l1] && !c2[l2]) violated = true;
    // Condition 2: some H activates A2 non-trivially but not A1.
    if (c2[l2] && !base[l2] && !c1[l1]) witness = true;
  }
  bool result = witness && !violated;

  std::lock_guard lock(memo_mutex_);
  ps_memo_[{a1, a2}] = result;
  return result;
}

bool Reasoner::prefers(ArgumentId a1, ArgumentId a2) const {
  bool p1 = isPresumptive(a1);
  bool p2 = isPresumptive(a2);
  if (!p1 && !p2) return prefersPS(a1, a2);
  if (!p1 && p2) return true;
  if (p1 && !p2) return false;
  auto phi1 = ofKind(arguments_.at(a1), ElementKind::kPresumption);
  auto phi2 = ofKind(arguments_.at(a2), ElementKind::kPresumption);
  // Fewer presumptions win: Phi(A1) a strict subset of Phi(A2).
  if (phi1.size() < phi2.size() && subset(phi1, phi2)) return true;
  return phi1 == phi2 && prefersPS(a1, a2);
}

std::vector<Defeater> Reasoner::defeaters(ArgumentId target) const {
  {
    std::lock_guard lock(memo_mutex_);
    auto it = defeater_memo_.find(target);
    if (it != defeater_memo_.end()) return it->second;
  }
  std::vector<Defeater> out;
  for (ArgumentId b : attackers_.at(target)) {
    bool forward = prefers(b, target);
    bool backward = prefers(target, b);
    if (forward && backward) {
      throw InternalInconsistencyError("preference is not antisymmetric between " + label(b) +
                                       " and " + label(target));
    }
    if (forward) {
      out.push_back({b, DefeatKind::kProper});
    } else if (!backward) {
      out.push_back({b, DefeatKind::kBlocking});
    }
  }
  std::lock_guard lock(memo_mutex_);
  defeater_memo_[target] = out;
  return out;
}

bool Reasoner::concordant(const std::vector<ArgumentId>& arguments) const {
  Support usable = strict_part_;
  for (auto a : arguments) usable = unite(usable, arguments_.at(a).support);
  return !CompiledProgram::contradictory(compiled_.closure(usable));
}

}  // namespace inca::am
