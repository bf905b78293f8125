#include "inca/core/formula.h"

#include <algorithm>
#include <stdexcept>

#include "inca/core/world.h"
#include "inca/errors.h"

namespace inca {

struct Formula::Node {
  Kind kind;
  Atom atom;
  std::vector<Formula> operands;
};

namespace {

int precedence(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::kOr:
      return 1;
    case Formula::Kind::kAnd:
      return 2;
    case Formula::Kind::kNot:
      return 3;
    default:
      return 4;
  }
}

void render(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::kTop:
      out += "true";
      return;
    case Formula::Kind::kBottom:
      out += "false";
      return;
    case Formula::Kind::kAtom:
      out += f.atomValue().toString();
      return;
    case Formula::Kind::kNot: {
      const Formula& inner = f.operands().front();
      out += '~';
      bool paren = precedence(inner.kind()) < precedence(Formula::Kind::kNot);
      if (paren) out += '(';
      render(inner, out);
      if (paren) out += ')';
      return;
    }
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr: {
      const char* sep = f.kind() == Formula::Kind::kAnd ? " ^ " : " v ";
      bool first = true;
      for (const auto& op : f.operands()) {
        if (!first) out += sep;
        first = false;
        // Nested same-kind operands are parenthesised so the tree shape
        // survives a parse round trip.
        bool paren = precedence(op.kind()) <= precedence(f.kind());
        if (paren) out += '(';
        render(op, out);
        if (paren) out += ')';
      }
      return;
    }
  }
}

}  // namespace

Formula::Formula() : Formula(top()) {}

Formula Formula::top() {
  static const auto node = std::make_shared<const Node>(Node{Kind::kTop, {}, {}});
  return Formula(node);
}

Formula Formula::bottom() {
  static const auto node = std::make_shared<const Node>(Node{Kind::kBottom, {}, {}});
  return Formula(node);
}

Formula Formula::atom(Atom atom) {
  return Formula(std::make_shared<const Node>(Node{Kind::kAtom, std::move(atom), {}}));
}

Formula Formula::negation(Formula operand) {
  return Formula(std::make_shared<const Node>(Node{Kind::kNot, {}, {std::move(operand)}}));
}

Formula Formula::conjunction(std::vector<Formula> operands) {
  if (operands.empty()) return top();
  if (operands.size() == 1) return operands.front();
  return Formula(std::make_shared<const Node>(Node{Kind::kAnd, {}, std::move(operands)}));
}

Formula Formula::disjunction(std::vector<Formula> operands) {
  if (operands.empty()) return bottom();
  if (operands.size() == 1) return operands.front();
  return Formula(std::make_shared<const Node>(Node{Kind::kOr, {}, std::move(operands)}));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const Atom& Formula::atomValue() const {
  if (node_->kind != Kind::kAtom) throw std::logic_error("formula is not an atom");
  return node_->atom;
}

std::span<const Formula> Formula::operands() const { return node_->operands; }

bool Formula::isGround() const {
  if (node_->kind == Kind::kAtom) return node_->atom.isGround();
  return std::all_of(node_->operands.begin(), node_->operands.end(),
                     [](const Formula& f) { return f.isGround(); });
}

std::vector<Atom> Formula::atoms() const {
  std::vector<Atom> out;
  std::vector<const Formula*> stack{this};
  // Depth-first, left to right.
  while (!stack.empty()) {
    const Formula* f = stack.back();
    stack.pop_back();
    if (f->kind() == Kind::kAtom) {
      if (std::find(out.begin(), out.end(), f->atomValue()) == out.end()) {
        out.push_back(f->atomValue());
      }
      continue;
    }
    auto ops = f->operands();
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) stack.push_back(&*it);
  }
  return out;
}

std::string Formula::toString() const {
  std::string out;
  render(*this, out);
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Formula::Kind::kAtom) return a.atomValue() == b.atomValue();
  auto x = a.operands();
  auto y = b.operands();
  return std::equal(x.begin(), x.end(), y.begin(), y.end());
}

Formula operator!(const Formula& f) { return Formula::negation(f); }
Formula operator&&(const Formula& a, const Formula& b) { return Formula::conjunction({a, b}); }
Formula operator||(const Formula& a, const Formula& b) { return Formula::disjunction({a, b}); }

namespace {

bool evaluate(const World& w, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kTop:
      return true;
    case Formula::Kind::kBottom:
      return false;
    case Formula::Kind::kAtom:
      return w.contains(f.atomValue());
    case Formula::Kind::kNot:
      return !evaluate(w, f.operands().front());
    case Formula::Kind::kAnd:
      for (const auto& op : f.operands()) {
        if (!evaluate(w, op)) return false;
      }
      return true;
    case Formula::Kind::kOr:
      for (const auto& op : f.operands()) {
        if (evaluate(w, op)) return true;
      }
      return false;
  }
  return false;
}

}  // namespace

bool satisfies(const World& world, const Formula& formula) {
  if (!formula.isGround()) {
    throw GroundednessError("cannot evaluate non-ground formula " + formula.toString());
  }
  return evaluate(world, formula);
}

}  // namespace inca
