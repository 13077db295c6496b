#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyharm::cli {

/// Exit status contract of the command-line tool.
enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

/// Runs the tool on `args` (args[0] is the program name). "-" as a spec path
/// reads the document from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace polyharm::cli
