#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "inca/core/language.h"

namespace inca::am {

enum class ElementKind { kFact, kPresumption, kStrictRule, kDefeasibleRule };

const char* kindName(ElementKind kind);

// One ground element of a PreDeLP program. Facts and presumptions have an
// empty body.
struct AMElement {
  std::string id;
  ElementKind kind = ElementKind::kFact;
  Literal head;
  std::vector<Literal> body;
  // Label of the schematic element this was grounded from; equals `id`
  // for elements written ground.
  std::string origin;

  bool isDefeasible() const {
    return kind == ElementKind::kPresumption || kind == ElementKind::kDefeasibleRule;
  }
  bool isRule() const {
    return kind == ElementKind::kStrictRule || kind == ElementKind::kDefeasibleRule;
  }
  // "head <- b1, b2" / "head -< b" / "head" / "head -<" (presumption).
  std::string toString() const;

  friend bool operator==(const AMElement&, const AMElement&) = default;
};

using ElementIndex = std::size_t;

// Pi_AM = (Theta, Omega, Phi, Delta), stored as one element list.
class AMProgram {
 public:
  AMProgram() = default;
  // Throws std::invalid_argument on duplicate ids, non-ground elements,
  // facts/presumptions with bodies, rules without bodies, or a condOp
  // literal stated as a fact.
  explicit AMProgram(std::vector<AMElement> elements);

  const std::vector<AMElement>& elements() const { return elements_; }
  const AMElement& element(ElementIndex i) const { return elements_.at(i); }
  std::size_t size() const { return elements_.size(); }
  std::optional<ElementIndex> find(std::string_view id) const;

  std::vector<ElementIndex> indicesOf(ElementKind kind) const;
  std::vector<AMElement> facts() const { return collect(ElementKind::kFact); }
  std::vector<AMElement> strictRules() const { return collect(ElementKind::kStrictRule); }
  std::vector<AMElement> presumptions() const { return collect(ElementKind::kPresumption); }
  std::vector<AMElement> defeasibleRules() const { return collect(ElementKind::kDefeasibleRule); }

 private:
  std::vector<AMElement> collect(ElementKind kind) const;

  std::vector<AMElement> elements_;
  std::unordered_map<std::string, ElementIndex> by_id_;
};

}  // namespace inca::am
