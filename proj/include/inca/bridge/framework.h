#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "inca/am/dialectic.h"
#include "inca/am/reasoner.h"
#include "inca/core/formula.h"
#include "inca/core/grounding.h"
#include "inca/core/world.h"
#include "inca/em/entailment.h"
#include "inca/em/knowledge_base.h"

namespace inca::bridge {

// Maps analytical-model element labels to environmental formulas. Elements
// without an entry are annotated with top.
class AnnotationFunction {
 public:
  AnnotationFunction() = default;
  // Throws GroundednessError for a non-ground formula.
  void set(const std::string& label, Formula formula);

  // Looks the element up by id, then by the schematic label it was
  // grounded from.
  const Formula& of(const am::AMElement& element) const;
  const std::map<std::string, Formula>& entries() const { return entries_; }
  // Distinct atoms over all annotation formulas, in label order.
  std::vector<Atom> atoms() const;

 private:
  std::map<std::string, Formula> entries_;
  Formula top_ = Formula::top();
};

// How poss(L) treats worlds in which no argument for L is valid.
enum class PossSemantics {
  // w is in poss(L) iff ~L is not warranted in w and some argument for L
  // is valid in w.
  kDerivable,
  // w is in poss(L) iff ~L is not warranted in w.
  kComplement,
};

struct FrameworkOptions {
  em::EntailmentOptions entailment;
  am::ReasonerOptions reasoner;
  PossSemantics poss = PossSemantics::kDerivable;
};

// I = (Pi_EM, Pi_AM, af). The environmental atom universe is extended with
// every atom used by an annotation (unless the knowledge base fixes its
// universe, in which case annotation atoms must already be in it).
class InCAFramework {
 public:
  InCAFramework(em::EMKnowledgeBase em, am::AMProgram am, AnnotationFunction af,
                FrameworkOptions options = {});
  InCAFramework(em::EMKnowledgeBase em, std::shared_ptr<const am::Reasoner> reasoner,
                AnnotationFunction af, FrameworkOptions options = {});
  ~InCAFramework();
  InCAFramework(InCAFramework&&) noexcept;
  InCAFramework& operator=(InCAFramework&&) noexcept;

  const em::EMKnowledgeBase& em() const { return engine_->knowledgeBase(); }
  const am::AMProgram& am() const { return reasoner_->program(); }
  const AnnotationFunction& af() const { return af_; }
  const am::Reasoner& reasoner() const { return *reasoner_; }
  std::shared_ptr<const am::Reasoner> sharedReasoner() const { return reasoner_; }
  const em::EntailmentEngine& engine() const { return *engine_; }
  const em::WorldSpace& worlds() const { return engine_->worlds(); }
  const FrameworkOptions& options() const { return options_; }

  // Declared constants and roles, when the framework was assembled from a
  // document. Used to check suspects and operations.
  void setConstants(ConstantPool pool) { constants_ = std::move(pool); }
  const std::optional<ConstantPool>& constants() const { return constants_; }

  // Per element: w |= af(element).
  std::vector<char> validElements(const World& world) const;
  // Every element of the argument's support is valid in w.
  bool isValid(am::ArgumentId argument, const World& world) const;
  // Marked forest for L induced by w: only arguments valid in w appear.
  // Memoised by the set of valid elements.
  std::shared_ptr<const am::DialecticalForest> forestIn(const Literal& literal,
                                                        const World& world) const;
  // w is a warranting scenario for L.
  bool warrantsIn(const World& world, const Literal& literal) const;

 private:
  struct Cache;

  std::shared_ptr<const am::Reasoner> reasoner_;
  AnnotationFunction af_;
  FrameworkOptions options_;
  std::unique_ptr<em::EntailmentEngine> engine_;
  std::vector<Formula> annotations_;
  std::optional<ConstantPool> constants_;
  std::unique_ptr<Cache> cache_;
};

}  // namespace inca::bridge
