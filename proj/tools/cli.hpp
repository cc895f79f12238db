#ifndef ACTREE_TOOLS_CLI_HPP_
#define ACTREE_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace actree::tools {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;     // parse or usage error
inline constexpr int kExitContract = 3;  // cycle, negative weight, size guard, ...
inline constexpr int kExitInternal = 4;  // a self-check failed

// Runs the command line `args` (without the program name).
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace actree::tools

#endif  // ACTREE_TOOLS_CLI_HPP_
