#pragma once

#include <iosfwd>

namespace pconvex {

enum ExitCode : int { exit_ok = 0, exit_malformed = 1, exit_domain = 2, exit_retry = 3 };

/// Parses the command line, runs one subcommand and writes its artifacts.
/// Returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pconvex
