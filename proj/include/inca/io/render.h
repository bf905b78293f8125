#pragma once

#include <string>

#include "inca/io/document.h"

namespace inca::io {

// Canonical text of a document. Sections appear in the order #sorts,
// #universe, #em, #ic, #am, #af and empty sections are left out.
// parseKB(renderKB(d)) == d.
std::string renderKB(const KBDocument& doc);

// "lit", "lit <- a, b, X != Y", "lit -< a" as written in an #am statement.
std::string renderStatement(const AMStatement& statement);

}  // namespace inca::io
