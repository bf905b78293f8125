#include "inca/am/program.h"

#include <stdexcept>

namespace inca::am {

const char* kindName(ElementKind kind) {
  switch (kind) {
    case ElementKind::kFact:
      return "fact";
    case ElementKind::kPresumption:
      return "presumption";
    case ElementKind::kStrictRule:
      return "strict rule";
    case ElementKind::kDefeasibleRule:
      return "defeasible rule";
  }
  return "?";
}

std::string AMElement::toString() const {
  std::string out = head.toString();
  switch (kind) {
    case ElementKind::kFact:
      return out;
    case ElementKind::kPresumption:
      return out + " -<";
    case ElementKind::kStrictRule:
      out += " <- ";
      break;
    case ElementKind::kDefeasibleRule:
      out += " -< ";
      break;
  }
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (i) out += ", ";
    out += body[i].toString();
  }
  return out;
}

AMProgram::AMProgram(std::vector<AMElement> elements) : elements_(std::move(elements)) {
  for (ElementIndex i = 0; i < elements_.size(); ++i) {
    auto& e = elements_[i];
    if (e.origin.empty()) e.origin = e.id;
    if (!by_id_.emplace(e.id, i).second) {
      throw std::invalid_argument("duplicate element id '" + e.id + "'");
    }
    if (!e.head.isGround()) throw std::invalid_argument("element " + e.id + " is not ground");
    for (const auto& b : e.body) {
      if (!b.isGround()) throw std::invalid_argument("element " + e.id + " is not ground");
    }
    if (e.isRule() == e.body.empty()) {
      throw std::invalid_argument("element " + e.id + ": " + kindName(e.kind) +
                                  (e.isRule() ? " needs a body" : " cannot have a body"));
    }
    if (e.kind == ElementKind::kFact && e.head.atom().predicate() == "condOp") {
      throw std::invalid_argument("element " + e.id +
                                  ": condOp literals must be defeasible, not facts");
    }
  }
}

std::optional<ElementIndex> AMProgram::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

std::vector<ElementIndex> AMProgram::indicesOf(ElementKind kind) const {
  std::vector<ElementIndex> out;
  for (ElementIndex i = 0; i < elements_.size(); ++i) {
    if (elements_[i].kind == kind) out.push_back(i);
  }
  return out;
}

std::vector<AMElement> AMProgram::collect(ElementKind kind) const {
  std::vector<AMElement> out;
  for (const auto& e : elements_) {
    if (e.kind == kind) out.push_back(e);
  }
  return out;
}

}  // namespace inca::am
