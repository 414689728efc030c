#pragma once

#include <iosfwd>

namespace unsharp {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2 };

/// Entry point of the `unsharp` tool; writes to the given streams instead of
/// the process's stdout/stderr.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace unsharp
