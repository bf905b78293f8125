#include "inca/bridge/framework.h"

#include <algorithm>
#include <shared_mutex>

#include "inca/errors.h"

namespace inca::bridge {

void AnnotationFunction::set(const std::string& label, Formula formula) {
  if (!formula.isGround()) {
    throw GroundednessError("annotation of " + label + " is not ground: " + formula.toString());
  }
  entries_.insert_or_assign(label, std::move(formula));
}

const Formula& AnnotationFunction::of(const am::AMElement& element) const {
  if (auto it = entries_.find(element.id); it != entries_.end()) return it->second;
  if (auto it = entries_.find(element.origin); it != entries_.end()) return it->second;
  return top_;
}

std::vector<Atom> AnnotationFunction::atoms() const {
  std::vector<Atom> out;
  for (const auto& [label, f] : entries_) {
    for (auto& a : f.atoms()) {
      if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(std::move(a));
    }
  }
  return out;
}

struct InCAFramework::Cache {
  std::shared_mutex mutex;
  std::map<std::pair<std::vector<char>, Literal>, std::shared_ptr<const am::DialecticalForest>>
      forests;
};

namespace {

em::EMKnowledgeBase withAnnotationAtoms(em::EMKnowledgeBase kb, const AnnotationFunction& af) {
  auto atoms = af.atoms();
  if (!kb.explicitUniverse()) return kb.withAtoms(atoms);
  for (const auto& a : atoms) {
    if (!kb.inUniverse(a)) {
      throw GroundednessError("annotation atom " + a.toString() + " is outside the declared universe");
    }
  }
  return kb;
}

}  // namespace

InCAFramework::InCAFramework(em::EMKnowledgeBase em, am::AMProgram am, AnnotationFunction af,
                             FrameworkOptions options)
    : InCAFramework(std::move(em),
                    std::make_shared<const am::Reasoner>(std::move(am), options.reasoner),
                    std::move(af), options) {}

InCAFramework::InCAFramework(em::EMKnowledgeBase em, std::shared_ptr<const am::Reasoner> reasoner,
                             AnnotationFunction af, FrameworkOptions options)
    : reasoner_(std::move(reasoner)),
      af_(std::move(af)),
      options_(options),
      cache_(std::make_unique<Cache>()) {
  engine_ = std::make_unique<em::EntailmentEngine>(withAnnotationAtoms(std::move(em), af_),
                                                   options_.entailment);
  for (const auto& e : reasoner_->program().elements()) annotations_.push_back(af_.of(e));
}

InCAFramework::~InCAFramework() = default;
InCAFramework::InCAFramework(InCAFramework&&) noexcept = default;
InCAFramework& InCAFramework::operator=(InCAFramework&&) noexcept = default;

std::vector<char> InCAFramework::validElements(const World& world) const {
  std::vector<char> out(annotations_.size());
  for (std::size_t i = 0; i < annotations_.size(); ++i) out[i] = satisfies(world, annotations_[i]);
  return out;
}

bool InCAFramework::isValid(am::ArgumentId argument, const World& world) const {
  for (auto e : reasoner_->argument(argument).support) {
    if (!satisfies(world, annotations_[e])) return false;
  }
  return true;
}

std::shared_ptr<const am::DialecticalForest> InCAFramework::forestIn(const Literal& literal,
                                                                     const World& world) const {
  auto valid = validElements(world);
  auto key = std::make_pair(valid, literal);
  {
    std::shared_lock lock(cache_->mutex);
    if (auto it = cache_->forests.find(key); it != cache_->forests.end()) return it->second;
  }
  const auto& r = *reasoner_;
  am::ArgumentFilter allowed = [&](am::ArgumentId a) {
    for (auto e : r.argument(a).support) {
      if (!valid[e]) return false;
    }
    return true;
  };
  auto forest = std::make_shared<const am::DialecticalForest>(am::buildForest(r, literal, allowed));
  std::unique_lock lock(cache_->mutex);
  return cache_->forests.emplace(std::move(key), std::move(forest)).first->second;
}

bool InCAFramework::warrantsIn(const World& world, const Literal& literal) const {
  return am::warrants(*forestIn(literal, world));
}

}  // namespace inca::bridge
