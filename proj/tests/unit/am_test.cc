#include <doctest.h>

#include <random>

#include "inca/am/dialectic.h"
#include "inca/am/reasoner.h"
#include "inca/errors.h"
#include "support/am_oracle.h"
#include "support/fixtures.h"
#include "support/random_kb.h"

using namespace inca;
using namespace inca::testing;
using am::ArgumentId;
using am::DefeatKind;

namespace {

struct Worm {
  bridge::InCAFramework fw = loadFramework("worm123.inca");
  const am::Reasoner& r = fw.reasoner();
  NamedArguments a = *namedArguments(r);
};

std::vector<am::AMElement> pick(const am::AMProgram& p, std::initializer_list<const char*> ids) {
  std::vector<am::AMElement> out;
  for (const char* id : ids) out.push_back(p.element(*p.find(id)));
  return out;
}

am::AMElement element(const std::string& id, am::ElementKind kind, const std::string& head,
                      std::vector<std::string> body = {}) {
  am::AMElement e;
  e.id = id;
  e.origin = id;
  e.kind = kind;
  e.head = lit(head);
  for (const auto& b : body) e.body.push_back(lit(b));
  return e;
}

std::optional<ArgumentId> argumentWith(const am::Reasoner& r, const std::string& conclusion,
                                       std::set<std::string> support) {
  return findArgument(r, std::move(support), lit(conclusion));
}

bool hasDefeater(const am::Reasoner& r, ArgumentId target, ArgumentId by, DefeatKind kind) {
  for (const auto& d : r.defeaters(target)) {
    if (d.argument == by && d.kind == kind) return true;
  }
  return false;
}

const am::DialecticalNode* childWith(const am::DialecticalNode& node, ArgumentId a) {
  for (const auto& c : node.children) {
    if (c.argument == a) return &c;
  }
  return nullptr;
}

void checkTreeAgainstOracle(const am::Reasoner& r, const am::DialecticalNode& node,
                            std::vector<am::LineStep>& line) {
  line.push_back({node.argument, node.defeat_kind});
  CHECK(lineAcceptable(r, line));
  // Children are exactly the defeaters that keep the line acceptable.
  std::set<std::pair<ArgumentId, DefeatKind>> expected, got;
  for (const auto& d : r.defeaters(node.argument)) {
    line.push_back({d.argument, d.kind});
    if (lineAcceptable(r, line)) expected.emplace(d.argument, d.kind);
    line.pop_back();
  }
  for (const auto& c : node.children) got.emplace(c.argument, *c.defeat_kind);
  CHECK(got == expected);
  // Marking rule.
  bool all_children_defeated = true;
  for (const auto& c : node.children) {
    all_children_defeated = all_children_defeated && c.mark == am::Mark::kDefeated;
  }
  CHECK((node.mark == am::Mark::kUndefeated) == all_children_defeated);
  for (const auto& c : node.children) checkTreeAgainstOracle(r, c, line);
  line.pop_back();
}

am::Reasoner penguin() {
  return am::Reasoner(am::AMProgram({
      element("t", am::ElementKind::kFact, "penguin(tweety)"),
      element("s", am::ElementKind::kStrictRule, "bird(tweety)", {"penguin(tweety)"}),
      element("d1", am::ElementKind::kDefeasibleRule, "flies(tweety)", {"bird(tweety)"}),
      element("d2", am::ElementKind::kDefeasibleRule, "neg flies(tweety)", {"penguin(tweety)"}),
  }));
}

}  // namespace

TEST_SUITE("am") {
  TEST_CASE("derives: presumption plus rule derives isCap") {
    Worm w;
    CHECK(am::derives(pick(w.fw.am(), {"p1", "d4"}), lit("isCap(baja,worm123)")));
  }

  TEST_CASE("derives: nothing follows from the empty set") {
    CHECK_FALSE(am::derives({}, lit("isCap(baja,worm123)")));
  }

  TEST_CASE("derives: chaining a defeasible and a strict rule") {
    Worm w;
    CHECK(am::derives(pick(w.fw.am(), {"t1a", "d1a", "w1b"}), lit("neg condOp(mojave,worm123)")));
    CHECK_FALSE(am::derives(pick(w.fw.am(), {"t1a", "w1b"}), lit("neg condOp(mojave,worm123)")));
  }

  TEST_CASE("isContradictory: the strict part of the running example is not contradictory") {
    Worm w;
    std::vector<am::AMElement> strict;
    for (const auto& e : w.fw.am().elements()) {
      if (!e.isDefeasible()) strict.push_back(e);
    }
    CHECK_FALSE(am::isContradictory(strict));
  }

  TEST_CASE("isContradictory: a fact and its complement") {
    CHECK(am::isContradictory(std::vector<am::AMElement>{
        element("a", am::ElementKind::kFact, "a"), element("b", am::ElementKind::kFact, "neg a")}));
  }

  TEST_CASE("isContradictory: the strict part with two opposing arguments") {
    Worm w;
    std::vector<am::AMElement> elements;
    for (const auto& e : w.fw.am().elements()) {
      if (!e.isDefeasible()) elements.push_back(e);
    }
    for (auto arg : {w.a.a1, w.a.a6}) {
      for (auto e : w.r.argument(arg).support) elements.push_back(w.fw.am().element(e));
    }
    CHECK(am::isContradictory(elements));
  }

  TEST_CASE("argumentsFor condOp(baja,worm123): the four expected supports") {
    Worm w;
    std::set<std::set<std::string>> got;
    for (auto a : w.r.argumentsFor(lit("condOp(baja,worm123)"))) got.insert(supportIds(w.r, a));
    CHECK(got == std::set<std::set<std::string>>{{"t1a", "d1a"},
                                                 {"p1", "p2", "d4", "w2a", "t1a", "t2"},
                                                 {"p1", "d2", "d4"},
                                                 {"p2", "d3", "t2"}});
  }

  TEST_CASE("argumentsFor isCap(baja,worm123): a single argument") {
    Worm w;
    auto args = w.r.argumentsFor(lit("isCap(baja,worm123)"));
    REQUIRE(args.size() == 1);
    CHECK(supportIds(w.r, args[0]) == std::set<std::string>{"p1", "d4"});
  }

  TEST_CASE("argumentsFor: a literal nothing mentions has no arguments") {
    Worm w;
    CHECK(w.r.argumentsFor(lit("condOp(krasnovia,worm123)")).empty());
    CHECK(w.r.argumentsFor(lit("unrelated(x)")).empty());
  }

  TEST_CASE("the remaining named arguments exist") {
    Worm w;
    CHECK(supportIds(w.r, w.a.a6) == std::set<std::string>{"d1b", "t1b", "w1a"});
    CHECK(supportIds(w.r, w.a.a7) == std::set<std::string>{"p3", "d5a"});
  }

  TEST_CASE("argumentsFor matches subset enumeration on the running example") {
    Worm w;
    std::set<std::pair<Literal, std::set<std::string>>> got;
    for (const auto& a : w.r.arguments()) {
      std::set<std::string> ids;
      for (auto e : a.defeasible) ids.insert(w.fw.am().element(e).id);
      got.emplace(a.conclusion, ids);
    }
    CHECK(got == bruteForceArguments(w.fw.am()));
  }

  TEST_CASE("the defeasibly derivable literals number twelve") {
    Worm w;
    CHECK(w.r.derivableLiterals().size() == 12);
  }

  TEST_CASE("isSubargument") {
    Worm w;
    CHECK(w.r.isSubargument(w.a.a5, w.a.a2));
    CHECK(w.r.isSubargument(w.a.a5, w.a.a3));
    CHECK(w.r.isSubargument(w.a.a2, w.a.a2));
    CHECK_FALSE(w.r.isSubargument(w.a.a5, w.a.a4));
  }

  TEST_CASE("attacks: the expected attack relations") {
    Worm w;
    for (auto a : {w.a.a1, w.a.a2, w.a.a3, w.a.a4}) CHECK(w.r.attacks(a, w.a.a6));
    CHECK(w.r.attacks(w.a.a5, w.a.a7));
    CHECK(w.r.attacks(w.a.a7, w.a.a2));
    CHECK_FALSE(w.r.attacks(w.a.a3, w.a.a4));
    CHECK_FALSE(w.r.attacks(w.a.a4, w.a.a3));
  }

  TEST_CASE("prefersPS: the argument using more information about Tweety wins") {
    am::Reasoner r = penguin();
    auto flies = argumentWith(r, "flies(tweety)", {"t", "s", "d1"});
    auto grounded = argumentWith(r, "neg flies(tweety)", {"t", "d2"});
    REQUIRE(flies);
    REQUIRE(grounded);
    CHECK(r.prefersPS(*grounded, *flies));
    CHECK_FALSE(r.prefersPS(*flies, *grounded));
    CHECK(r.defeaters(*flies) == std::vector<am::Defeater>{{*grounded, DefeatKind::kProper}});
    CHECK(r.defeaters(*grounded).empty());
    CHECK(am::warrantStatus(r, lit("neg flies(tweety)")) == am::WarrantStatus::kWarranted);
    CHECK(am::warrantStatus(r, lit("flies(tweety)")) == am::WarrantStatus::kNotWarranted);
  }

  TEST_CASE("prefersPS is irreflexive") {
    Worm w;
    for (ArgumentId a = 0; a < w.r.arguments().size(); ++a) CHECK_FALSE(w.r.prefersPS(a, a));
  }

  TEST_CASE("prefersPS: the evidence argument and its strict counter are incomparable") {
    Worm w;
    CHECK_FALSE(w.r.prefersPS(w.a.a1, w.a.a6));
    CHECK_FALSE(w.r.prefersPS(w.a.a6, w.a.a1));
  }

  TEST_CASE("prefers: the expected preferences and incomparabilities") {
    Worm w;
    CHECK(w.r.prefers(w.a.a6, w.a.a2));
    CHECK(w.r.prefers(w.a.a6, w.a.a3));
    CHECK(w.r.prefers(w.a.a6, w.a.a4));
    CHECK_FALSE(w.r.prefers(w.a.a1, w.a.a6));
    CHECK_FALSE(w.r.prefers(w.a.a6, w.a.a1));
    CHECK_FALSE(w.r.prefers(w.a.a5, w.a.a7));
    CHECK_FALSE(w.r.prefers(w.a.a7, w.a.a5));
  }

  TEST_CASE("prefers: a factual argument beats a presumptive one") {
    am::Reasoner r(am::AMProgram({
        element("f", am::ElementKind::kFact, "a"),
        element("p", am::ElementKind::kPresumption, "c"),
        element("d1", am::ElementKind::kDefeasibleRule, "b", {"a"}),
        element("d2", am::ElementKind::kDefeasibleRule, "neg b", {"a", "c"}),
    }));
    auto factual = argumentWith(r, "b", {"f", "d1"});
    auto presumptive = argumentWith(r, "neg b", {"f", "p", "d2"});
    REQUIRE(factual);
    REQUIRE(presumptive);
    CHECK_FALSE(r.isPresumptive(*factual));
    CHECK(r.isPresumptive(*presumptive));
    CHECK(r.prefers(*factual, *presumptive));
    CHECK_FALSE(r.prefers(*presumptive, *factual));
  }

  TEST_CASE("prefers: fewer presumptions win") {
    am::Reasoner r(am::AMProgram({
        element("p1", am::ElementKind::kPresumption, "a"),
        element("p2", am::ElementKind::kPresumption, "c"),
        element("d1", am::ElementKind::kDefeasibleRule, "b", {"a"}),
        element("d2", am::ElementKind::kDefeasibleRule, "neg b", {"a", "c"}),
    }));
    auto fewer = argumentWith(r, "b", {"p1", "d1"});
    auto more = argumentWith(r, "neg b", {"p1", "p2", "d2"});
    REQUIRE(fewer);
    REQUIRE(more);
    CHECK(r.prefers(*fewer, *more));
    CHECK_FALSE(r.prefers(*more, *fewer));
  }

  TEST_CASE("defeaters: expected proper and blocking defeaters") {
    Worm w;
    CHECK(hasDefeater(w.r, w.a.a2, w.a.a6, DefeatKind::kProper));
    CHECK(hasDefeater(w.r, w.a.a2, w.a.a7, DefeatKind::kBlocking));
    CHECK(hasDefeater(w.r, w.a.a6, w.a.a1, DefeatKind::kBlocking));
    CHECK(hasDefeater(w.r, w.a.a5, w.a.a7, DefeatKind::kBlocking));
    CHECK(hasDefeater(w.r, w.a.a7, w.a.a5, DefeatKind::kBlocking));
    // A6 is preferred to A2, so A2 does not defeat it.
    CHECK(w.r.attacks(w.a.a2, w.a.a6));
    for (const auto& d : w.r.defeaters(w.a.a6)) CHECK(d.argument != w.a.a2);
  }

  TEST_CASE("defeaters: an unattacked argument has none") {
    Worm w;
    auto fact = argumentWith(w.r, "evidOf(baja,worm123)", {"t1a"});
    REQUIRE(fact);
    CHECK(w.r.defeaters(*fact).empty());
  }

  TEST_CASE("dialectical tree rooted at A2 has children A6 and A7") {
    Worm w;
    auto tree = am::buildDialecticalTree(w.r, w.a.a2);
    CHECK(childWith(tree.root, w.a.a6));
    CHECK(childWith(tree.root, w.a.a7));
    CHECK(childWith(tree.root, w.a.a6)->defeat_kind == DefeatKind::kProper);
    CHECK(childWith(tree.root, w.a.a7)->defeat_kind == DefeatKind::kBlocking);
  }

  TEST_CASE("dialectical tree without defeaters is a single node") {
    Worm w;
    auto fact = argumentWith(w.r, "evidOf(baja,worm123)", {"t1a"});
    auto tree = am::buildDialecticalTree(w.r, *fact);
    CHECK(tree.root.children.empty());
    CHECK(tree.root.mark == am::Mark::kUndefeated);
  }

  TEST_CASE("dialectical tree rooted at A1: A6 below it never reintroduces A1") {
    Worm w;
    auto tree = am::buildDialecticalTree(w.r, w.a.a1);
    const auto* a6 = childWith(tree.root, w.a.a6);
    REQUIRE(a6);
    CHECK(a6->defeat_kind == DefeatKind::kBlocking);
    CHECK(childWith(*a6, w.a.a1) == nullptr);
    // After a blocking defeater only proper ones may follow.
    for (const auto& c : a6->children) CHECK(c.defeat_kind == DefeatKind::kProper);
  }

  TEST_CASE("markTree: leaves, single child, and a chain") {
    am::DialecticalTree single;
    CHECK(am::markTree(single) == am::Mark::kUndefeated);

    am::DialecticalTree one;
    one.root.children.push_back({1, DefeatKind::kProper, am::Mark::kDefeated, {}});
    CHECK(am::markTree(one) == am::Mark::kDefeated);
    CHECK(one.root.children[0].mark == am::Mark::kUndefeated);

    am::DialecticalTree chain;
    am::DialecticalNode d2{2, DefeatKind::kProper, am::Mark::kDefeated, {}};
    am::DialecticalNode d1{1, DefeatKind::kProper, am::Mark::kUndefeated, {d2}};
    chain.root.children.push_back(d1);
    CHECK(am::markTree(chain) == am::Mark::kUndefeated);
    CHECK(chain.root.children[0].mark == am::Mark::kDefeated);
    // Idempotent.
    auto again = chain;
    CHECK(am::markTree(again) == am::Mark::kUndefeated);
    CHECK(again.root.children[0].mark == chain.root.children[0].mark);
  }

  TEST_CASE("warrantStatus on the program without annotations") {
    Worm w;
    // A5 and A7 block each other and nothing else settles isCap.
    CHECK(am::warrantStatus(w.r, lit("isCap(baja,worm123)")) == am::WarrantStatus::kUndecided);
    CHECK(am::warrantStatus(w.r, lit("neg isCap(baja,worm123)")) == am::WarrantStatus::kUndecided);
    CHECK(am::warrantStatus(w.r, lit("evidOf(baja,worm123)")) == am::WarrantStatus::kWarranted);
    CHECK(am::warrantStatus(w.r, lit("isCap(mojave,worm123)")) == am::WarrantStatus::kUndecided);
  }

  TEST_CASE("a contradictory strict part is rejected") {
    CHECK_THROWS_AS(am::Reasoner(am::AMProgram({element("a", am::ElementKind::kFact, "a"),
                                                element("b", am::ElementKind::kFact, "neg a")})),
                    std::invalid_argument);
  }

  TEST_CASE("program validation") {
    CHECK_THROWS_AS(am::AMProgram({element("x", am::ElementKind::kFact, "condOp(baja,worm123)")}),
                    std::invalid_argument);
    CHECK_THROWS_AS(am::AMProgram({element("x", am::ElementKind::kFact, "a"),
                                   element("x", am::ElementKind::kFact, "b")}),
                    std::invalid_argument);
    CHECK_NOTHROW(am::AMProgram({element("x", am::ElementKind::kFact, "a"),
                                 element("y", am::ElementKind::kPresumption, "a")}));
  }

  TEST_CASE("property: trees on the running example are exhaustive and acceptable") {
    Worm w;
    for (ArgumentId a = 0; a < w.r.arguments().size(); ++a) {
      auto tree = am::buildDialecticalTree(w.r, a);
      std::vector<am::LineStep> line;
      checkTreeAgainstOracle(w.r, tree.root, line);
      for (const auto& l : am::linesOf(tree)) CHECK(am::isAcceptableLine(w.r, l));
    }
  }

  TEST_CASE("property: random programs against brute force and the tree invariants") {
    std::mt19937 rng(99);
    int programs = 0;
    while (programs < 100) {
      am::AMProgram program = randomProgram(rng);
      std::unique_ptr<am::Reasoner> r;
      try {
        r = std::make_unique<am::Reasoner>(program);
      } catch (const std::invalid_argument&) {
        continue;
      }
      ++programs;
      std::set<std::pair<Literal, std::set<std::string>>> got;
      for (const auto& a : r->arguments()) {
        std::set<std::string> ids;
        for (auto e : a.defeasible) ids.insert(program.element(e).id);
        got.emplace(a.conclusion, ids);
        // The recorded support is itself enough to derive the conclusion.
        std::vector<const am::AMElement*> used;
        for (auto e : a.support) used.push_back(&program.element(e));
        CHECK(naiveClosure(used).count(a.conclusion) == 1);
      }
      REQUIRE(got == bruteForceArguments(program));

      const auto n = r->arguments().size();
      for (ArgumentId x = 0; x < n; ++x) {
        CHECK_FALSE(r->prefers(x, x));
        for (ArgumentId y = x + 1; y < n; ++y) CHECK_FALSE((r->prefers(x, y) && r->prefers(y, x)));
      }
      for (ArgumentId x = 0; x < n; ++x) {
        auto tree = am::buildDialecticalTree(*r, x);
        std::vector<am::LineStep> line;
        checkTreeAgainstOracle(*r, tree.root, line);
        auto remarked = tree;
        CHECK(am::markTree(remarked) == tree.root.mark);
      }
      for (const auto& l : programLiterals(program)) {
        auto status = am::warrantStatus(*r, l);
        auto opposite = am::warrantStatus(*r, complement(l));
        if (status == am::WarrantStatus::kWarranted) {
          CHECK(opposite == am::WarrantStatus::kNotWarranted);
        }
        if (status == am::WarrantStatus::kUndecided) {
          CHECK(opposite == am::WarrantStatus::kUndecided);
        }
      }
    }
  }
}
