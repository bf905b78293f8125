#include "inca/bridge/scenarios.h"

#include "inca/errors.h"

namespace inca::bridge {

namespace {

std::vector<World> worldsAt(const InCAFramework& fw, const std::vector<std::size_t>& indices) {
  std::vector<World> out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back(fw.worlds().world(i));
  return out;
}

bool someArgumentValid(const InCAFramework& fw, const Literal& literal, const World& w) {
  for (auto a : fw.reasoner().argumentsFor(literal)) {
    if (fw.isValid(a, w)) return true;
  }
  return false;
}

Formula characteristicDisjunction(const InCAFramework& fw, const std::vector<std::size_t>& indices) {
  std::vector<Formula> parts;
  parts.reserve(indices.size());
  for (auto i : indices) parts.push_back(fw.worlds().characteristicFormula(i));
  return Formula::disjunction(std::move(parts));
}

}  // namespace

std::vector<std::size_t> necIndices(const InCAFramework& fw, const Literal& literal) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fw.worlds().size(); ++i) {
    if (fw.warrantsIn(fw.worlds().world(i), literal)) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> possIndices(const InCAFramework& fw, const Literal& literal) {
  const Literal negated = complement(literal);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fw.worlds().size(); ++i) {
    World w = fw.worlds().world(i);
    if (fw.warrantsIn(w, negated)) continue;
    if (fw.options().poss == PossSemantics::kDerivable && !someArgumentValid(fw, literal, w)) {
      continue;
    }
    out.push_back(i);
  }
  return out;
}

std::vector<World> necSet(const InCAFramework& fw, const Literal& literal) {
  return worldsAt(fw, necIndices(fw, literal));
}

std::vector<World> possSet(const InCAFramework& fw, const Literal& literal) {
  return worldsAt(fw, possIndices(fw, literal));
}

em::ProbabilityInterval probFromDistribution(const Literal& literal, const WorldDistribution& pr,
                                             const InCAFramework& fw) {
  std::vector<Rational> mass(fw.worlds().size());
  Rational total = 0;
  for (const auto& [w, p] : pr) {
    auto index = fw.worlds().indexOf(w);
    if (!index) throw DistributionError("world " + w.toString() + " is not a conforming world");
    if (p < 0) throw DistributionError("negative probability for world " + w.toString());
    mass[*index] += p;
    total += p;
  }
  if (total != 1) throw DistributionError("probabilities sum to " + formatRational(total) + ", not 1");
  em::ProbabilityInterval out{0, 0};
  for (auto i : necIndices(fw, literal)) out.lower += mass[i];
  for (auto i : possIndices(fw, literal)) out.upper += mass[i];
  return out;
}

em::ProbabilityInterval probBounds(const Literal& literal, const InCAFramework& fw) {
  Formula nec = characteristicDisjunction(fw, necIndices(fw, literal));
  Formula poss = characteristicDisjunction(fw, possIndices(fw, literal));
  return {fw.engine().minimum(nec), fw.engine().maximum(poss)};
}

}  // namespace inca::bridge
