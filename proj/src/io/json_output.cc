#include "inca/io/json_output.h"

namespace inca::io {

using nlohmann::json;

json intervalJson(const em::ProbabilityInterval& interval) {
  return {{"p", formatRational(interval.p())},
          {"eps", formatRational(interval.eps())},
          {"lower", formatRational(interval.lower)},
          {"upper", formatRational(interval.upper)}};
}

json worldJson(const World& world) {
  json out = json::array();
  for (const auto& a : world.atoms()) out.push_back(a.toString());
  return out;
}

json argumentJson(const am::Reasoner& reasoner, am::ArgumentId id) {
  json support = json::array();
  for (auto e : reasoner.argument(id).support) support.push_back(reasoner.program().element(e).id);
  return {{"argument", reasoner.label(id)},
          {"support", support},
          {"conclusion", reasoner.argument(id).conclusion.toString()}};
}

namespace {

json nodeJson(const am::Reasoner& reasoner, const am::DialecticalNode& node) {
  json out = argumentJson(reasoner, node.argument);
  out["mark"] = am::markName(node.mark);
  out["defeatKind"] = node.defeat_kind ? json(am::defeatKindName(*node.defeat_kind)) : json(nullptr);
  json children = json::array();
  for (const auto& c : node.children) children.push_back(nodeJson(reasoner, c));
  out["children"] = std::move(children);
  return out;
}

}  // namespace

json forestJson(const am::Reasoner& reasoner, const am::DialecticalForest& forest) {
  json out = json::array();
  for (const auto& t : forest.trees) out.push_back(nodeJson(reasoner, t.root));
  return out;
}

json attributionJson(const am::Reasoner& reasoner, const attribution::AttributionAnswer& answer) {
  json per_suspect = json::object();
  json trace = json::object();
  for (const auto& r : answer.per_suspect) {
    per_suspect[r.actor] = intervalJson(r.interval);
    if (r.trace) {
      trace[r.actor] = {{"world", worldJson(r.trace->world)},
                        {"forest", forestJson(reasoner, *r.trace->forest)}};
    } else {
      trace[r.actor] = nullptr;
    }
  }
  return {{"mostProbable", answer.most_probable}, {"perSuspect", per_suspect}, {"trace", trace}};
}

}  // namespace inca::io
