#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dlinv::cli {

/// Exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kIdentityFailure = 1,
    kUsageError = 2,
    kResourceExceeded = 3,
};

/// Runs the command line `args` (without the program name); results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dlinv::cli
