#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "inca/bridge/scenarios.h"

namespace inca::attribution {

// A piece of evidence c : p +- eps; plain evidence is c : 1 +- 0.
struct EvidenceItem {
  Atom atom;
  Rational p = 1;
  Rational eps = 0;
};

// How two suspects' intervals are compared.
enum class IntervalOrder {
  // A' beats A iff midpoint(A') > midpoint(A).
  kMidpoint,
  // A' beats A iff lower(A') > upper(A).
  kLowerBoundDominance,
};

struct AttributionQuery {
  std::vector<std::string> suspects;
  std::string operation;
  std::vector<EvidenceItem> evidence;
  IntervalOrder order = IntervalOrder::kMidpoint;
};

// One warranting world for condOp(suspect, operation) and its forest.
struct Trace {
  World world;
  std::shared_ptr<const am::DialecticalForest> forest;
};

struct SuspectResult {
  std::string actor;
  Literal literal;
  em::ProbabilityInterval interval;
  std::vector<World> nec;
  std::vector<World> poss;
  std::optional<Trace> trace;
};

struct AttributionAnswer {
  std::vector<std::string> most_probable;
  // In query order.
  std::vector<SuspectResult> per_suspect;
};

// (Pi_EM u Pi_E, Pi_AM, af). Throws InconsistentKBError if the framework is
// inconsistent already and InconsistentEvidenceError if the evidence makes
// it so.
bridge::InCAFramework applyEvidence(const bridge::InCAFramework& fw,
                                    const std::vector<EvidenceItem>& evidence);

// The suspects that no other suspect beats under the query's interval order.
// Throws SortError when a suspect is not a declared actor or the operation
// is not a declared operation, std::invalid_argument when there are no
// suspects.
AttributionAnswer mostProbableSuspects(const bridge::InCAFramework& fw, const AttributionQuery& q);

// condOp(actor, operation) as an analytical literal.
Literal condOpLiteral(const std::string& actor, const std::string& operation);

}  // namespace inca::attribution
