#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stepsha::cli {

enum class ExitStatus : int {
    Ok = 0,        // verified, matched, or completed
    Negative = 1,  // checked and negative: no collision, path mismatch, failed self-test
    Usage = 2,     // bad flags or unreadable input
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stepsha::cli
