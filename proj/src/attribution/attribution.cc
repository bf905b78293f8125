#include "inca/attribution/attribution.h"

#include <bit>
#include <stdexcept>

#include "inca/errors.h"

namespace inca::attribution {

Literal condOpLiteral(const std::string& actor, const std::string& operation) {
  return Literal(Atom("condOp", {Term::constant(actor), Term::constant(operation)},
                      ModelTag::kAnalytical));
}

namespace {

constexpr std::size_t kConflictSearchLimit = 12;

std::vector<std::string> render(const std::vector<em::ProbabilisticFormula>& formulas) {
  std::vector<std::string> out;
  for (const auto& f : formulas) out.push_back(f.toString());
  return out;
}

// Smallest inconsistent subset, found by trying subsets in order of size.
std::vector<em::ProbabilisticFormula> minimalConflict(const em::EMKnowledgeBase& kb,
                                                      const em::EntailmentOptions& options) {
  const auto& all = kb.formulas();
  const std::size_t n = all.size();
  if (n > kConflictSearchLimit) return all;
  for (std::size_t size = 1; size <= n; ++size) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
      std::vector<em::ProbabilisticFormula> subset;
      for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1u) subset.push_back(all[i]);
      }
      em::EMKnowledgeBase candidate(subset, kb.constraints(), kb.universe());
      if (!em::EntailmentEngine(candidate, options).isConsistent()) return subset;
    }
  }
  return all;
}

void checkRole(const bridge::InCAFramework& fw, const std::string& name, Role role) {
  const auto& pool = fw.constants();
  if (!pool) return;
  auto declared = pool->roleOf(name);
  if (declared != role) {
    throw SortError("'" + name + "' is not a declared " + roleName(role) + " constant");
  }
}

bool beats(const em::ProbabilityInterval& challenger, const em::ProbabilityInterval& incumbent,
           IntervalOrder order) {
  if (order == IntervalOrder::kMidpoint) return challenger.p() > incumbent.p();
  return challenger.lower > incumbent.upper;
}

}  // namespace

bridge::InCAFramework applyEvidence(const bridge::InCAFramework& fw,
                                    const std::vector<EvidenceItem>& evidence) {
  if (!fw.engine().isConsistent()) {
    throw InconsistentKBError("the environmental model is inconsistent before adding evidence");
  }
  std::vector<em::ProbabilisticFormula> extra;
  for (const auto& e : evidence) {
    if (e.atom.tag() != ModelTag::kEnvironmental) {
      throw std::invalid_argument("evidence " + e.atom.toString() + " is not an environmental atom");
    }
    extra.emplace_back(Formula::atom(e.atom), e.p, e.eps);
  }
  em::EMKnowledgeBase kb = fw.em().withFormulas(extra);
  bridge::InCAFramework out(kb, fw.sharedReasoner(), fw.af(), fw.options());
  if (fw.constants()) out.setConstants(*fw.constants());
  if (!out.engine().isConsistent()) {
    throw InconsistentEvidenceError("evidence makes the environmental model inconsistent",
                                    render(minimalConflict(out.em(), fw.options().entailment)));
  }
  return out;
}

AttributionAnswer mostProbableSuspects(const bridge::InCAFramework& fw, const AttributionQuery& q) {
  if (q.suspects.empty()) throw std::invalid_argument("an attribution query needs suspects");
  for (const auto& s : q.suspects) checkRole(fw, s, Role::kActor);
  checkRole(fw, q.operation, Role::kOperation);

  bridge::InCAFramework augmented = applyEvidence(fw, q.evidence);
  AttributionAnswer answer;
  for (const auto& s : q.suspects) {
    SuspectResult r;
    r.actor = s;
    r.literal = condOpLiteral(s, q.operation);
    r.interval = bridge::probBounds(r.literal, augmented);
    r.nec = bridge::necSet(augmented, r.literal);
    r.poss = bridge::possSet(augmented, r.literal);
    if (!r.nec.empty()) r.trace = Trace{r.nec.front(), augmented.forestIn(r.literal, r.nec.front())};
    answer.per_suspect.push_back(std::move(r));
  }
  for (const auto& candidate : answer.per_suspect) {
    bool beaten = false;
    for (const auto& other : answer.per_suspect) {
      if (beats(other.interval, candidate.interval, q.order)) beaten = true;
    }
    if (!beaten) answer.most_probable.push_back(candidate.actor);
  }
  return answer;
}

}  // namespace inca::attribution
