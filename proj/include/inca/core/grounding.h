#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "inca/core/language.h"

namespace inca {

// Role flags on constants: C_act / C_ops membership.
enum class Role { kPlain, kActor, kOperation };

const char* roleName(Role role);

// Constants available for grounding together with their declared roles,
// plus the argument positions of sorted predicates.
class ConstantPool {
 public:
  // Argument sorts of condOp, motiv, isCap and tgt.
  static std::map<std::string, std::vector<std::optional<Role>>> defaultSignatures();

  ConstantPool();

  // Adds a constant (idempotent); a non-plain role overrides kPlain.
  void add(const std::string& name, Role role = Role::kPlain);
  bool contains(const std::string& name) const;
  std::optional<Role> roleOf(const std::string& name) const;
  // Declaration order.
  const std::vector<std::string>& names() const { return order_; }
  std::vector<std::string> namesWithRole(Role role) const;

  // Position sort for a predicate argument; nullopt means unsorted.
  std::optional<Role> sortOf(const std::string& predicate, std::size_t position) const;
  void setSignature(const std::string& predicate, std::vector<std::optional<Role>> sorts);

 private:
  std::vector<std::string> order_;
  std::map<std::string, Role> roles_;
  std::map<std::string, std::vector<std::optional<Role>>> signatures_;
};

// X != Y guard, resolved during grounding.
struct Inequality {
  Term lhs;
  Term rhs;
  friend bool operator==(const Inequality&, const Inequality&) = default;
};

// Head/body shape shared by facts, presumptions and both rule kinds.
// Facts and presumptions have an empty body.
struct RuleShape {
  Literal head;
  std::vector<Literal> body;
  std::vector<Inequality> guards;
  friend bool operator==(const RuleShape&, const RuleShape&) = default;
};

using Binding = std::map<std::string, std::string>;

// Variables in first-occurrence order (head, body, then guards).
std::vector<std::string> variablesOf(const RuleShape& shape);

// Every admissible binding of the shape's variables: sorted positions only
// take constants of the matching role, inequality guards discard bindings.
// Bindings are produced in lexicographic order of (variable order,
// constant pool order).
std::vector<Binding> admissibleBindings(const RuleShape& shape, const ConstantPool& pool);

// All ground instances of a schematic rule or literal. Guards never appear
// in the returned instances. A ground input yields itself.
std::vector<RuleShape> instantiate(const RuleShape& shape, const ConstantPool& pool);
std::vector<Literal> instantiate(const Literal& literal, const ConstantPool& pool);

Literal substitute(const Literal& literal, const Binding& binding);

}  // namespace inca
