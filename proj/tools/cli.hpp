#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ghq::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsage = 2,        // parse failure, unreadable input, unwritable output
    kNumerical = 3,    // domain, parameter, range or divergence error
    kConvergence = 4,
};

// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ghq::cli
