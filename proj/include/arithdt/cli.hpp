#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arithdt {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitDomainError = 1, kExitUsage = 2 };

/// Runs the command line (args excludes the program name). Text or JSON goes to
/// out unless --out is given; diagnostics go to err.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int dispatch(int argc, char** argv);

}  // namespace arithdt
