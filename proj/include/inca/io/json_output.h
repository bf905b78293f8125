#pragma once

#include <json.hpp>

#include "inca/attribution/attribution.h"

namespace inca::io {

// Rationals are written as exact strings ("0.9", "1/3").
nlohmann::json intervalJson(const em::ProbabilityInterval& interval);
nlohmann::json worldJson(const World& world);
nlohmann::json argumentJson(const am::Reasoner& reasoner, am::ArgumentId id);
// Array of tree roots; each node has argument, support, conclusion, mark,
// defeatKind (null at roots) and children.
nlohmann::json forestJson(const am::Reasoner& reasoner, const am::DialecticalForest& forest);
// mostProbable, perSuspect and trace.
nlohmann::json attributionJson(const am::Reasoner& reasoner,
                               const attribution::AttributionAnswer& answer);

}  // namespace inca::io
