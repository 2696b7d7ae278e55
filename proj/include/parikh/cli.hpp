#pragma once

// Command-line front end. Kept in the library so the dispatch logic is
// testable without spawning processes.

#include <iosfwd>
#include <string>
#include <vector>

namespace parikh::cli {

/// Runs one CLI invocation. `args` excludes the program name.
/// Exit codes: 0 success, 1 operation failure (not representable,
/// counterexample found), 2 usage/domain/capacity errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace parikh::cli
