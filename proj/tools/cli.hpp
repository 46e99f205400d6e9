#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "haefliger/error.hpp"

namespace haefliger::cli {

/// Exit status for a library error: 10 + the error kind's ordinal, so each
/// failure class has its own code. Usage errors exit with 2.
int exit_code(ErrorKind kind);

/// Runs the command line `args` (args[0] is the program name) and writes the
/// report to `out` and diagnostics to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace haefliger::cli
