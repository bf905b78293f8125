#include <doctest.h>

#include <random>

#include "inca/em/entailment.h"
#include "inca/em/simplex.h"
#include "inca/errors.h"
#include "support/fixtures.h"
#include "support/random_kb.h"

using namespace inca;
using namespace inca::testing;

namespace {

Rational q(const char* text) { return parseRational(text); }

em::ProbabilisticFormula pf(const Formula& f, const char* p, const char* eps) {
  return em::ProbabilisticFormula(f, q(p), q(eps));
}

Formula g() { return Formula::atom(gAtom()); }
Formula c() { return Formula::atom(cAtom()); }
Formula m() { return Formula::atom(mAtom()); }

em::EMKnowledgeBase fixtureEM() { return loadFramework("worm123.inca").em(); }

}  // namespace

TEST_SUITE("em") {
  TEST_CASE("enumerateWorlds: three atoms without constraints give the eight worlds") {
    auto worlds = em::enumerateWorlds(fixtureEM());
    CHECK(worlds.size() == 8);
    std::set<World> expected;
    for (int i = 1; i <= 8; ++i) expected.insert(namedWorld(i));
    CHECK(asSet(worlds) == expected);
  }

  TEST_CASE("enumerateWorlds: empty universe gives the empty world") {
    auto worlds = em::enumerateWorlds(em::EMKnowledgeBase());
    REQUIRE(worlds.size() == 1);
    CHECK(worlds[0].empty());
  }

  TEST_CASE("enumerateWorlds: oneOf{a,b} keeps the empty world and both singletons") {
    Atom a("a", {}), b("b", {});
    em::EMKnowledgeBase kb({}, {em::IntegrityConstraint({a, b})});
    CHECK(asSet(em::enumerateWorlds(kb)) == std::set<World>{World(), World({a}), World({b})});
  }

  TEST_CASE("enumerateWorlds: binary counting order over the universe") {
    Atom a("a", {}), b("b", {});
    em::EMKnowledgeBase kb({}, {}, std::vector<Atom>{a, b});
    auto worlds = em::enumerateWorlds(kb);
    REQUIRE(worlds.size() == 4);
    CHECK(worlds[0] == World());
    CHECK(worlds[1] == World({a}));
    CHECK(worlds[2] == World({b}));
    CHECK(worlds[3] == World({a, b}));
  }

  TEST_CASE("enumerateWorlds: universe over the cap is a CapacityError") {
    em::EMKnowledgeBase kb({}, {}, envAtoms(5));
    em::EntailmentOptions options;
    options.max_atoms = 4;
    try {
      em::enumerateWorlds(kb, options);
      FAIL("expected CapacityError");
    } catch (const CapacityError& e) {
      CHECK(e.cap() == 4);
      CHECK(std::string(e.what()).find("4") != std::string::npos);
    }
  }

  TEST_CASE("lpBounds: worked example query gives [0.8, 1], reported 0.9 +- 0.1") {
    auto interval = em::lpBounds(fixtureEM(), g() || m());
    CHECK(interval.lower == q("0.8"));
    CHECK(interval.upper == 1);
    CHECK(interval.p() == q("0.9"));
    CHECK(interval.eps() == q("0.1"));
    CHECK(interval.toString() == "0.9 +- 0.1");
  }

  TEST_CASE("lpBounds: top is [1, 1] on a consistent knowledge base") {
    auto interval = em::lpBounds(fixtureEM(), Formula::top());
    CHECK(interval.lower == 1);
    CHECK(interval.upper == 1);
  }

  TEST_CASE("lpBounds: f1 alone bounds govCybLab by [0.7, 0.9]") {
    em::EMKnowledgeBase kb({pf(g(), "0.8", "0.1")});
    auto interval = em::lpBounds(kb, g());
    CHECK(interval.lower == q("0.7"));
    CHECK(interval.upper == q("0.9"));
    // Oracle over the two worlds of the single atom.
    RandomEMCase oracle_case;
    oracle_case.atoms = 1;
    RandomFormula atom;
    atom.kind = RandomFormula::Kind::kAtom;
    oracle_case.rows.push_back({atom, 16, 2});
    auto o = oracle_case.oracle(atom);
    REQUIRE(o.feasible);
    CHECK(o.minimum == interval.lower);
    CHECK(o.maximum == interval.upper);
  }

  TEST_CASE("maxEntailment: worked example gives (0.9, 0.1)") {
    auto e = em::maxEntailment(fixtureEM(), g() || m());
    CHECK(e.p == q("0.9"));
    CHECK(e.eps == q("0.1"));
  }

  TEST_CASE("maxEntailment: bottom gives (0, 0)") {
    auto e = em::maxEntailment(fixtureEM(), Formula::bottom());
    CHECK(e.p == 0);
    CHECK(e.eps == 0);
  }

  TEST_CASE("maxEntailment: f2 alone bounds not cybCapAge by 0.8 +- 0.1") {
    em::EMKnowledgeBase kb({pf(c(), "0.2", "0.1")});
    auto e = em::maxEntailment(kb, !c());
    CHECK(e.p == q("0.8"));
    CHECK(e.eps == q("0.1"));
    RandomEMCase oracle_case;
    oracle_case.atoms = 1;
    RandomFormula atom;
    atom.kind = RandomFormula::Kind::kAtom;
    oracle_case.rows.push_back({atom, 4, 2});
    RandomFormula neg;
    neg.kind = RandomFormula::Kind::kNot;
    neg.kids.push_back(atom);
    auto o = oracle_case.oracle(neg);
    CHECK(o.minimum == e.p - e.eps);
    CHECK(o.maximum == e.p + e.eps);
  }

  TEST_CASE("isConsistent: the running example is consistent") {
    CHECK(em::isConsistent(fixtureEM()));
    CHECK(em::isConsistent(loadFramework("worm123_declared.inca").em()));
  }

  TEST_CASE("isConsistent: disjunction at 0.4 with conjunction at 0.6 is inconsistent") {
    auto kb = io::environmentalModel(io::loadKB(fixturePath("inconsistent.inca")));
    CHECK_FALSE(em::isConsistent(kb));
    CHECK_THROWS_AS(em::lpBounds(kb, Formula::top()), InconsistentKBError);
  }

  TEST_CASE("isConsistent: the empty knowledge base is consistent") {
    CHECK(em::isConsistent(em::EMKnowledgeBase()));
  }

  TEST_CASE("query atoms outside the universe are rejected") {
    Formula other = Formula::atom(Atom("elsewhere", {}));
    CHECK_THROWS_AS(em::lpBounds(fixtureEM(), other), GroundednessError);
  }

  TEST_CASE("probabilistic formulas validate their bounds") {
    CHECK_THROWS_AS(pf(g(), "1.2", "0"), std::invalid_argument);
    CHECK_THROWS_AS(pf(g(), "0.9", "0.2"), std::invalid_argument);
    CHECK_THROWS_AS(pf(g(), "0.5", "-0.1"), std::invalid_argument);
    CHECK_NOTHROW(pf(g(), "0.9", "0.1"));
  }

  TEST_CASE("integrity constraints need two distinct atoms") {
    CHECK_THROWS(em::IntegrityConstraint({gAtom()}));
    CHECK_THROWS(em::IntegrityConstraint({gAtom(), gAtom()}));
  }

  TEST_CASE("simplex: small exact programs") {
    // max x + y s.t. x + 2y <= 4, 3x + y <= 6.
    std::vector<em::LinearRow> rows = {{{1, 2}, 0, 4}, {{3, 1}, 0, 6}};
    std::vector<Rational> cost = {1, 1};
    auto s = em::solveLinearProgram(cost, em::Objective::kMaximize, rows);
    REQUIRE(s.optimal());
    CHECK(s.value == Rational(14, 5));
    // Infeasible: x >= 2 and x <= 1.
    std::vector<em::LinearRow> bad = {{{1}, 2, 3}, {{1}, 0, 1}};
    std::vector<Rational> one = {1};
    CHECK(em::solveLinearProgram(one, em::Objective::kMinimize, bad).status ==
          em::LpSolution::Status::kInfeasible);
    // Degenerate: x = y and x + y = 1 with a zero objective.
    std::vector<em::LinearRow> tied = {{{1, -1}, 0, 0}, {{1, 1}, 1, 1}};
    std::vector<Rational> zero = {0, 0};
    auto t = em::solveLinearProgram(zero, em::Objective::kMaximize, tied);
    REQUIRE(t.optimal());
    CHECK(t.x[0] == Rational(1, 2));
  }

  TEST_CASE("property: bounds lie in [0, 1], duality and monotonicity") {
    std::mt19937 rng(2024);
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
      auto kase = randomEMCase(rng);
      auto kb = kase.knowledgeBase();
      if (!em::isConsistent(kb)) continue;
      ++checked;
      auto u = kase.universe();
      RandomFormula rq = randomFormula(rng, kase.atoms, 2);
      Formula query = rq.toFormula(u);
      auto iv = em::lpBounds(kb, query);
      CHECK(0 <= iv.lower);
      CHECK(iv.lower <= iv.upper);
      CHECK(iv.upper <= 1);
      auto neg = em::lpBounds(kb, !query);
      CHECK(iv.lower == 1 - neg.upper);
      CHECK(iv.upper == 1 - neg.lower);
      // Adding a formula consistent with the KB can only narrow the interval.
      auto extra = kase;
      RandomEMCase::Row row;
      row.formula = randomFormula(rng, kase.atoms, 2);
      row.p = 10;
      row.eps = 10;
      extra.rows.push_back(row);
      auto narrower = em::lpBounds(extra.knowledgeBase(), query);
      CHECK(iv.contains(narrower));
    }
    CHECK(checked > 30);
  }

  TEST_CASE("property: lpBounds matches vertex enumeration on 200 random knowledge bases") {
    std::mt19937 rng(7);
    int consistent = 0;
    for (int trial = 0; trial < 200; ++trial) {
      auto kase = randomEMCase(rng);
      auto kb = kase.knowledgeBase();
      RandomFormula rq = randomFormula(rng, kase.atoms, 3);
      auto o = kase.oracle(rq);
      em::EntailmentEngine engine(kb);
      REQUIRE(engine.isConsistent() == o.feasible);
      if (!o.feasible) continue;
      ++consistent;
      auto iv = em::lpBounds(kb, rq.toFormula(kase.universe()));
      CHECK(iv.lower == o.minimum);
      CHECK(iv.upper == o.maximum);
    }
    CHECK(consistent > 50);
  }

  TEST_CASE("vertex distributions satisfy the knowledge base") {
    em::EntailmentEngine engine(fixtureEM());
    std::vector<Rational> cost(engine.worlds().size());
    for (std::size_t i = 0; i < cost.size(); ++i) cost[i] = static_cast<long>(i % 3);
    auto x = engine.vertex(cost, em::Objective::kMinimize);
    CHECK(engine.satisfiedBy(x));
    std::vector<Rational> uniform(engine.worlds().size(), Rational(1, 8));
    CHECK_FALSE(engine.satisfiedBy(uniform));
  }
}
