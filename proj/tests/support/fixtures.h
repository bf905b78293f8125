#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "inca/attribution/attribution.h"
#include "inca/io/assemble.h"
#include "inca/io/parser.h"

namespace inca::testing {

inline std::filesystem::path fixturePath(const std::string& name) {
  return std::filesystem::path(INCA_FIXTURE_DIR) / name;
}

inline std::filesystem::path goldenPath(const std::string& name) {
  return std::filesystem::path(INCA_GOLDEN_DIR) / name;
}

inline std::string readFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline bridge::InCAFramework loadFramework(const std::string& name,
                                           bridge::FrameworkOptions options = {}) {
  return io::assemble(io::loadKB(fixturePath(name)), options);
}

inline Atom emAtom(const std::string& text) { return io::parseFormula(text).atomValue(); }
inline Literal lit(const std::string& text) { return io::parseLiteral(text); }

// The running example's environmental atoms.
inline Atom gAtom() { return emAtom("govCybLab(baja)"); }
inline Atom cAtom() { return emAtom("cybCapAge(baja,5)"); }
inline Atom mAtom() { return emAtom("mseTT(baja,2)"); }

// w1..w8 as listed with the worked linear program.
inline World namedWorld(int i) {
  switch (i) {
    case 1: return World({gAtom(), cAtom(), mAtom()});
    case 2: return World({gAtom(), cAtom()});
    case 3: return World({gAtom(), mAtom()});
    case 4: return World({cAtom(), mAtom()});
    case 5: return World({cAtom()});
    case 6: return World({gAtom()});
    case 7: return World({mAtom()});
    default: return World();
  }
}

inline std::set<World> namedWorlds(std::initializer_list<int> ids) {
  std::set<World> out;
  for (int i : ids) out.insert(namedWorld(i));
  return out;
}

inline std::set<World> asSet(const std::vector<World>& worlds) {
  return {worlds.begin(), worlds.end()};
}

inline std::set<std::string> supportIds(const am::Reasoner& r, am::ArgumentId a) {
  std::set<std::string> out;
  for (auto e : r.argument(a).support) out.insert(r.program().element(e).id);
  return out;
}

inline std::optional<am::ArgumentId> findArgument(const am::Reasoner& r,
                                                  std::set<std::string> support,
                                                  const Literal& conclusion) {
  for (auto a : r.argumentsFor(conclusion)) {
    if (supportIds(r, a) == support) return a;
  }
  return std::nullopt;
}

// The seven arguments of the running example, identified by their supports.
struct NamedArguments {
  am::ArgumentId a1, a2, a3, a4, a5, a6, a7;
};

inline std::optional<NamedArguments> namedArguments(const am::Reasoner& r) {
  Literal cb = lit("condOp(baja,worm123)");
  Literal cap = lit("isCap(baja,worm123)");
  auto a1 = findArgument(r, {"t1a", "d1a"}, cb);
  auto a2 = findArgument(r, {"p1", "p2", "d4", "w2a", "t1a", "t2"}, cb);
  auto a3 = findArgument(r, {"p1", "d2", "d4"}, cb);
  auto a4 = findArgument(r, {"p2", "d3", "t2"}, cb);
  auto a5 = findArgument(r, {"p1", "d4"}, cap);
  auto a6 = findArgument(r, {"d1b", "t1b", "w1a"}, complement(cb));
  auto a7 = findArgument(r, {"p3", "d5a"}, complement(cap));
  if (!a1 || !a2 || !a3 || !a4 || !a5 || !a6 || !a7) return std::nullopt;
  return NamedArguments{*a1, *a2, *a3, *a4, *a5, *a6, *a7};
}

}  // namespace inca::testing
