#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace convexdiff::cli {

// Runs one command (args exclude the program name) and returns the process
// exit code: 0 on success, 1 for rejected input or parameters, 2 when a
// provably impossible state was observed (always a bug). Structured output
// goes to `out` as JSON, diagnostics to `err`. Deterministic: identical
// args and input files produce byte-identical output.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace convexdiff::cli
