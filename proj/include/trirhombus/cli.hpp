#ifndef TRIRHOMBUS_CLI_HPP
#define TRIRHOMBUS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace trirhombus::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
};

/// Runs one command line (arguments without the program name). `in` backs
/// `verify -`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace trirhombus::cli

#endif  // TRIRHOMBUS_CLI_HPP
