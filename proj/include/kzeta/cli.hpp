#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kzeta {

// Parses and runs one CLI invocation (args excludes the program name).
// Writes the JSON (or CSV) payload to out and diagnostics to err.
// Returns 0 on success, 1 on a verification/tolerance mismatch, 2 on a
// usage or validation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kzeta
