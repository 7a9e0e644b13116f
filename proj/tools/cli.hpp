#ifndef MAGN_TOOLS_CLI_HPP
#define MAGN_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace magn::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // a verification reported a mathematical failure
  kUsage = 2,        // bad flags or malformed literals
  kResourceLimit = 3,
  kError = 4,
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace magn::cli

#endif  // MAGN_TOOLS_CLI_HPP
