#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kink::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kNotConverged = 2,
    kPropertyFailure = 3,
};

/// Entry point shared by the kinksolve binary and the tests. `args`
/// excludes the program name, e.g. {"solve", "--a", "0.5"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kink::cli
