#ifndef HTG_CLI_HPP
#define HTG_CLI_HPP

#include <string>
#include <vector>

namespace htg {

/// Runs the command line given the arguments after the program name.
/// Exit codes: 0 success, 1 usage, 2 parameter/validation errors,
/// 3 verification failures, 4 instance over the oracle cap.
int run_cli(const std::vector<std::string>& args);

}  // namespace htg

#endif
