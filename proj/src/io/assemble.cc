#include "inca/io/assemble.h"

namespace inca::io {

namespace {

void addConstants(const Literal& l, ConstantPool& pool) {
  for (const auto& t : l.atom().args()) {
    if (t.isConstant()) pool.add(t.name());
  }
}

}  // namespace

ConstantPool constantsOf(const KBDocument& doc) {
  ConstantPool pool;
  for (const auto& s : doc.sorts) {
    for (const auto& c : s.constants) pool.add(c, s.role);
  }
  for (const auto& s : doc.am) {
    addConstants(s.shape.head, pool);
    for (const auto& b : s.shape.body) addConstants(b, pool);
    for (const auto& g : s.shape.guards) {
      if (g.lhs.isConstant()) pool.add(g.lhs.name());
      if (g.rhs.isConstant()) pool.add(g.rhs.name());
    }
  }
  return pool;
}

std::string instanceId(const std::string& label, const std::vector<std::string>& variables,
                       const Binding& binding) {
  if (variables.empty()) return label;
  std::string out = label + "[";
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (i) out += ",";
    out += binding.at(variables[i]);
  }
  return out + "]";
}

am::AMProgram groundProgram(const KBDocument& doc, const ConstantPool& pool) {
  std::vector<am::AMElement> elements;
  for (const auto& s : doc.am) {
    auto variables = variablesOf(s.shape);
    for (const auto& binding : admissibleBindings(s.shape, pool)) {
      am::AMElement e;
      e.id = instanceId(s.label, variables, binding);
      e.kind = s.kind;
      e.head = substitute(s.shape.head, binding);
      for (const auto& b : s.shape.body) e.body.push_back(substitute(b, binding));
      e.origin = s.label;
      elements.push_back(std::move(e));
    }
  }
  return am::AMProgram(std::move(elements));
}

em::EMKnowledgeBase environmentalModel(const KBDocument& doc) {
  std::vector<em::ProbabilisticFormula> formulas;
  for (const auto& s : doc.em) formulas.emplace_back(s.formula, s.p, s.eps);
  std::vector<em::IntegrityConstraint> constraints;
  for (const auto& s : doc.ic) constraints.emplace_back(s.atoms);
  return em::EMKnowledgeBase(std::move(formulas), std::move(constraints), doc.universe);
}

bridge::AnnotationFunction annotations(const KBDocument& doc) {
  bridge::AnnotationFunction af;
  for (const auto& s : doc.af) af.set(s.label, s.formula);
  return af;
}

bridge::InCAFramework assemble(const KBDocument& doc, bridge::FrameworkOptions options) {
  ConstantPool pool = constantsOf(doc);
  bridge::InCAFramework fw(environmentalModel(doc), groundProgram(doc, pool), annotations(doc),
                           options);
  fw.setConstants(std::move(pool));
  return fw;
}

}  // namespace inca::io
