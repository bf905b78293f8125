#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace inca::io {

// Runs the command line `inca <args...>` (args excludes the program name).
// Returns 0 on success, 1 on domain errors (parse, inconsistency,
// capacity, sort) and 2 on usage errors.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace inca::io
