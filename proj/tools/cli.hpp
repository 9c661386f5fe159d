#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace holant::cli {

enum ExitCode : int { Ok = 0, Usage = 1, ParseError = 2, DomainError = 3, Anomaly = 4 };

/// Runs one `holant` invocation. Results go to out (or to --out), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace holant::cli
