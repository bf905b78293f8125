#include "inca/io/render.h"

#include <sstream>

namespace inca::io {

bool operator==(const KBDocument& a, const KBDocument& b) {
  auto same = [](const auto& x, const auto& y, auto eq) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!eq(x[i], y[i])) return false;
    }
    return true;
  };
  return same(a.em, b.em,
              [](const EMStatement& x, const EMStatement& y) {
                return x.formula == y.formula && x.p == y.p && x.eps == y.eps;
              }) &&
         same(a.ic, b.ic,
              [](const ICStatement& x, const ICStatement& y) { return x.atoms == y.atoms; }) &&
         same(a.am, b.am,
              [](const AMStatement& x, const AMStatement& y) {
                return x.label == y.label && x.kind == y.kind && x.shape == y.shape;
              }) &&
         same(a.af, b.af,
              [](const AFStatement& x, const AFStatement& y) {
                return x.label == y.label && x.formula == y.formula;
              }) &&
         same(a.sorts, b.sorts,
              [](const SortStatement& x, const SortStatement& y) {
                return x.role == y.role && x.constants == y.constants;
              }) &&
         a.universe == b.universe;
}

namespace {

std::string joinAtoms(const std::vector<Atom>& atoms) {
  std::string out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += ", ";
    out += atoms[i].toString();
  }
  return out;
}

const char* sortKeyword(Role role) {
  switch (role) {
    case Role::kActor:
      return "actor";
    case Role::kOperation:
      return "operation";
    case Role::kPlain:
      return "constant";
  }
  return "constant";
}

}  // namespace

std::string renderStatement(const AMStatement& s) {
  switch (s.kind) {
    case am::ElementKind::kFact:
      return "fact " + s.shape.head.toString();
    case am::ElementKind::kPresumption:
      return "presume " + s.shape.head.toString();
    case am::ElementKind::kStrictRule:
    case am::ElementKind::kDefeasibleRule:
      break;
  }
  std::string out = s.shape.head.toString();
  out += s.kind == am::ElementKind::kStrictRule ? " <- " : " -< ";
  bool first = true;
  for (const auto& b : s.shape.body) {
    if (!first) out += ", ";
    first = false;
    out += b.toString();
  }
  for (const auto& g : s.shape.guards) {
    out += ", " + g.lhs.name() + " != " + g.rhs.name();
  }
  return out;
}

std::string renderKB(const KBDocument& doc) {
  std::ostringstream out;
  if (!doc.sorts.empty()) {
    out << "#sorts\n";
    for (const auto& s : doc.sorts) {
      out << sortKeyword(s.role) << ' ';
      for (std::size_t i = 0; i < s.constants.size(); ++i) out << (i ? ", " : "") << s.constants[i];
      out << ".\n";
    }
  }
  if (doc.universe) {
    out << "#universe\n";
    if (!doc.universe->empty()) out << joinAtoms(*doc.universe) << ".\n";
  }
  if (!doc.em.empty()) {
    out << "#em\n";
    for (const auto& s : doc.em) {
      out << s.formula.toString() << " : " << formatRational(s.p) << " +- " << formatRational(s.eps)
          << ".\n";
    }
  }
  if (!doc.ic.empty()) {
    out << "#ic\n";
    for (const auto& s : doc.ic) out << "oneOf{" << joinAtoms(s.atoms) << "}.\n";
  }
  if (!doc.am.empty()) {
    out << "#am\n";
    for (const auto& s : doc.am) out << s.label << " : " << renderStatement(s) << ".\n";
  }
  if (!doc.af.empty()) {
    out << "#af\n";
    for (const auto& s : doc.af) out << s.label << " : " << s.formula.toString() << ".\n";
  }
  return out.str();
}

}  // namespace inca::io
