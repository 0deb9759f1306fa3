#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace valparam::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { Ok = 0, DomainError = 1, Inconclusive = 2 };

/// Runs the tool on args (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace valparam::cli
