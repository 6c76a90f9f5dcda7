#ifndef NILBOUND_TOOLS_COMMANDS_HPP
#define NILBOUND_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace nilbound::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,     ///< bad flags, non-prime p, malformed JSON
  kGuard = 2,     ///< guard or search budget refused the request
  kInvariant = 3, ///< a computed result contradicted its prediction
};

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`; input files named "-" (the default) are read
/// from `in`.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err);

} // namespace nilbound::cli

#endif // NILBOUND_TOOLS_COMMANDS_HPP
