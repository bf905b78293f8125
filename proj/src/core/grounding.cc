#include "inca/core/grounding.h"

#include <algorithm>
#include <stdexcept>

namespace inca {

const char* roleName(Role role) {
  switch (role) {
    case Role::kActor:
      return "actor";
    case Role::kOperation:
      return "operation";
    case Role::kPlain:
      break;
  }
  return "constant";
}

std::map<std::string, std::vector<std::optional<Role>>> ConstantPool::defaultSignatures() {
  return {
      {"condOp", {Role::kActor, Role::kOperation}},
      {"motiv", {Role::kActor, Role::kActor}},
      {"isCap", {Role::kActor, Role::kOperation}},
      {"tgt", {Role::kActor, Role::kOperation}},
  };
}

ConstantPool::ConstantPool() : signatures_(defaultSignatures()) {}

void ConstantPool::add(const std::string& name, Role role) {
  auto [it, inserted] = roles_.emplace(name, role);
  if (inserted) {
    order_.push_back(name);
  } else if (role != Role::kPlain) {
    it->second = role;
  }
}

bool ConstantPool::contains(const std::string& name) const { return roles_.count(name) > 0; }

std::optional<Role> ConstantPool::roleOf(const std::string& name) const {
  auto it = roles_.find(name);
  if (it == roles_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> ConstantPool::namesWithRole(Role role) const {
  std::vector<std::string> out;
  for (const auto& n : order_) {
    if (roles_.at(n) == role) out.push_back(n);
  }
  return out;
}

std::optional<Role> ConstantPool::sortOf(const std::string& predicate,
                                         std::size_t position) const {
  auto it = signatures_.find(predicate);
  if (it == signatures_.end() || position >= it->second.size()) return std::nullopt;
  return it->second[position];
}

void ConstantPool::setSignature(const std::string& predicate,
                                std::vector<std::optional<Role>> sorts) {
  signatures_[predicate] = std::move(sorts);
}

namespace {

void collectVariables(const Literal& lit, std::vector<std::string>& out) {
  for (const auto& t : lit.atom().args()) {
    if (t.isVariable() && std::find(out.begin(), out.end(), t.name()) == out.end()) {
      out.push_back(t.name());
    }
  }
}

void collectVariable(const Term& t, std::vector<std::string>& out) {
  if (t.isVariable() && std::find(out.begin(), out.end(), t.name()) == out.end()) {
    out.push_back(t.name());
  }
}

// Intersection of the sorts a variable occupies; nullopt when unsorted.
// A variable in two positions with different roles has no admissible value.
struct VariableSort {
  bool constrained = false;
  bool conflicting = false;
  Role role = Role::kPlain;
};

void noteSorts(const Literal& lit, const ConstantPool& pool,
               std::map<std::string, VariableSort>& sorts) {
  const auto& args = lit.atom().args();
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (!args[i].isVariable()) continue;
    auto sort = pool.sortOf(lit.atom().predicate(), i);
    if (!sort) continue;
    auto& vs = sorts[args[i].name()];
    if (vs.constrained && vs.role != *sort) vs.conflicting = true;
    vs.constrained = true;
    vs.role = *sort;
  }
}

std::string resolve(const Term& t, const Binding& b) {
  if (t.isConstant()) return t.name();
  auto it = b.find(t.name());
  if (it == b.end()) throw std::logic_error("unbound variable " + t.name());
  return it->second;
}

}  // namespace

std::vector<std::string> variablesOf(const RuleShape& shape) {
  std::vector<std::string> vars;
  collectVariables(shape.head, vars);
  for (const auto& l : shape.body) collectVariables(l, vars);
  for (const auto& g : shape.guards) {
    collectVariable(g.lhs, vars);
    collectVariable(g.rhs, vars);
  }
  return vars;
}

std::vector<Binding> admissibleBindings(const RuleShape& shape, const ConstantPool& pool) {
  auto vars = variablesOf(shape);
  std::map<std::string, VariableSort> sorts;
  noteSorts(shape.head, pool, sorts);
  for (const auto& l : shape.body) noteSorts(l, pool, sorts);

  std::vector<std::vector<std::string>> domains;
  domains.reserve(vars.size());
  for (const auto& v : vars) {
    auto it = sorts.find(v);
    if (it == sorts.end()) {
      domains.push_back(pool.names());
    } else if (it->second.conflicting) {
      domains.emplace_back();
    } else {
      domains.push_back(pool.namesWithRole(it->second.role));
    }
  }

  std::vector<Binding> out;
  if (std::any_of(domains.begin(), domains.end(), [](const auto& d) { return d.empty(); })) {
    return out;
  }
  std::vector<std::size_t> cursor(vars.size(), 0);
  while (true) {
    Binding b;
    for (std::size_t i = 0; i < vars.size(); ++i) b[vars[i]] = domains[i][cursor[i]];
    bool ok = std::all_of(shape.guards.begin(), shape.guards.end(), [&](const Inequality& g) {
      return resolve(g.lhs, b) != resolve(g.rhs, b);
    });
    if (ok) out.push_back(std::move(b));

    // Odometer, last variable fastest.
    std::size_t i = vars.size();
    while (i > 0) {
      --i;
      if (++cursor[i] < domains[i].size()) break;
      cursor[i] = 0;
      if (i == 0) return out;
    }
    if (vars.empty()) return out;
  }
}

Literal substitute(const Literal& literal, const Binding& binding) {
  std::vector<Term> args;
  args.reserve(literal.atom().arity());
  for (const auto& t : literal.atom().args()) args.push_back(Term::constant(resolve(t, binding)));
  return Literal(Atom(literal.atom().predicate(), std::move(args), literal.atom().tag()),
                 literal.negated());
}

std::vector<RuleShape> instantiate(const RuleShape& shape, const ConstantPool& pool) {
  std::vector<RuleShape> out;
  for (const auto& b : admissibleBindings(shape, pool)) {
    RuleShape g;
    g.head = substitute(shape.head, b);
    g.body.reserve(shape.body.size());
    for (const auto& l : shape.body) g.body.push_back(substitute(l, b));
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Literal> instantiate(const Literal& literal, const ConstantPool& pool) {
  std::vector<Literal> out;
  for (auto& r : instantiate(RuleShape{literal, {}, {}}, pool)) out.push_back(std::move(r.head));
  return out;
}

}  // namespace inca
