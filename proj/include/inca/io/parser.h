#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "inca/attribution/attribution.h"
#include "inca/core/world.h"
#include "inca/io/document.h"

namespace inca::io {

// Parses a knowledge base. Throws ParseError at the first syntax error and
// for duplicate labels, arity conflicts, annotations of unknown labels,
// non-ground environmental content and condOp facts.
KBDocument parseKB(std::string_view text);
// Reads a UTF-8 file and parses it. Throws ParseError (line 0) when the
// file cannot be read.
KBDocument loadKB(const std::filesystem::path& path);

// Single items, as used on the command line. The whole input must be
// consumed.
Formula parseFormula(std::string_view text);
Literal parseLiteral(std::string_view text);
// Comma-separated ground environmental atoms; empty text is the empty world.
World parseWorldSpec(std::string_view text);

// One statement per line: `atom.` (1 +- 0) or `atom : p +- e.`
std::vector<attribution::EvidenceItem> parseEvidence(std::string_view text);
std::vector<attribution::EvidenceItem> loadEvidence(const std::filesystem::path& path);

}  // namespace inca::io
