#ifndef BEI_CLI_HPP
#define BEI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bei {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitInputError = 2,
    kExitSizeCap = 3,
};

/// Runs the command line with `args` (program name excluded). The default
/// vertex cap comes from BEI_MAX_N when set.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bei

#endif  // BEI_CLI_HPP
