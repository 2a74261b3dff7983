#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lidcol::cli {

enum ExitCode : int {
    ok = 0,
    invalid = 1,      // colouring rejected, or bench rows with errors
    input_error = 2,  // bad flags, unreadable or malformed files
    inconclusive = 3, // exact search ran out of budget
};

/// Runs the command line `args` (args[0] is the program name). Results go
/// to `out`, reports and diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace lidcol::cli
