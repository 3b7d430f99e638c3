#ifndef HOLT_CLI_HPP
#define HOLT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace holt::cli {

enum ExitStatus : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kDomainAbort = 3,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace holt::cli

#endif // HOLT_CLI_HPP
