#pragma once

#include <map>
#include <vector>

#include "inca/bridge/framework.h"

namespace inca::bridge {

using WorldDistribution = std::map<World, Rational>;

// Indices into fw.worlds() of the warranting scenarios for L.
std::vector<std::size_t> necIndices(const InCAFramework& fw, const Literal& literal);
// Indices of the worlds where L can hold (see PossSemantics).
std::vector<std::size_t> possIndices(const InCAFramework& fw, const Literal& literal);

std::vector<World> necSet(const InCAFramework& fw, const Literal& literal);
std::vector<World> possSet(const InCAFramework& fw, const Literal& literal);

// [sum of Pr over nec(L), sum of Pr over poss(L)]. Throws DistributionError
// unless pr is nonnegative, sums to 1 and only uses conforming worlds.
em::ProbabilityInterval probFromDistribution(const Literal& literal, const WorldDistribution& pr,
                                             const InCAFramework& fw);

// Minimum over the disjunction of for(w), w in nec(L), and maximum over the
// disjunction for poss(L).
em::ProbabilityInterval probBounds(const Literal& literal, const InCAFramework& fw);

}  // namespace inca::bridge
