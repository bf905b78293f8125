#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inca/am/derivation.h"
#include "inca/am/program.h"

namespace inca::am {

using ArgumentId = std::size_t;

// <A, L>: `support` is the defeasible part (a minimal subset of Phi and
// Delta) together with the facts and strict rules its derivation uses,
// sorted by element index.
struct Argument {
  std::vector<ElementIndex> support;
  std::vector<ElementIndex> defeasible;
  Literal conclusion;
};

enum class DefeatKind { kProper, kBlocking };

const char* defeatKindName(DefeatKind kind);

struct Defeater {
  ArgumentId argument;
  DefeatKind kind;
  friend bool operator==(const Defeater&, const Defeater&) = default;
};

struct ReasonerOptions {
  // Largest set F of defeasibly derivable literals over which generalized
  // specificity enumerates activation sets.
  std::size_t max_activation_literals = 16;
};

// Argument-level analysis of one ground PreDeLP program. Every argument
// for every literal is built up front; preference results are memoised.
// Instances are shared read-only between threads; the memo is guarded.
class Reasoner {
 public:
  // Throws std::invalid_argument when the facts and strict rules alone
  // derive a complementary pair.
  explicit Reasoner(AMProgram program, ReasonerOptions options = {});
  Reasoner(const Reasoner&) = delete;
  Reasoner& operator=(const Reasoner&) = delete;

  const AMProgram& program() const { return program_; }
  const CompiledProgram& compiled() const { return compiled_; }
  const ReasonerOptions& options() const { return options_; }

  const std::vector<Argument>& arguments() const { return arguments_; }
  const Argument& argument(ArgumentId id) const { return arguments_.at(id); }
  std::vector<ArgumentId> argumentsFor(const Literal& literal) const;
  // "A<n>", 1-based in construction order.
  std::string label(ArgumentId id) const;
  // "<{t1a, d1a}, condOp(baja,worm123)>" with element ids in support order.
  std::string describe(ArgumentId id) const;

  bool isPresumptive(ArgumentId id) const;
  bool isSubargument(ArgumentId b, ArgumentId a) const;
  const std::vector<ArgumentId>& subarguments(ArgumentId a) const { return subarguments_.at(a); }

  bool attacks(ArgumentId attacker, ArgumentId target) const;
  const std::vector<ArgumentId>& attackersOf(ArgumentId target) const {
    return attackers_.at(target);
  }

  // Generalized specificity. Throws CapacityError when |F| exceeds the cap.
  bool prefersPS(ArgumentId a1, ArgumentId a2) const;
  // Presumption-enabled preference.
  bool prefers(ArgumentId a1, ArgumentId a2) const;
  // Attackers that are preferred (proper) or incomparable (blocking).
  std::vector<Defeater> defeaters(ArgumentId target) const;

  // F: every literal with a defeasible derivation from the whole program.
  const std::vector<LiteralId>& derivableLiterals() const { return derivable_; }

  // Defeasible closure of Theta and Omega together with the supports of
  // `arguments` is non-contradictory.
  bool concordant(const std::vector<ArgumentId>& arguments) const;

 private:
  void buildArguments();
  std::vector<ElementIndex> strictOf(const Argument& a) const;
  std::vector<ElementIndex> ofKind(const Argument& a, ElementKind kind) const;

  AMProgram program_;
  ReasonerOptions options_;
  CompiledProgram compiled_;
  std::vector<ElementIndex> strict_part_;  // Theta and Omega
  std::vector<Argument> arguments_;
  std::multimap<LiteralId, ArgumentId> by_conclusion_;
  std::vector<std::vector<ArgumentId>> subarguments_;
  std::vector<std::vector<ArgumentId>> attackers_;
  std::vector<LiteralId> derivable_;

  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<ArgumentId, ArgumentId>, bool> ps_memo_;
  mutable std::map<ArgumentId, std::vector<Defeater>> defeater_memo_;
};

}  // namespace inca::am
