#ifndef ILPQ_TOOLS_COMMANDS_HPP
#define ILPQ_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ilpq::tools {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,   // bad arguments, malformed or out-of-range queries
    kExitIo = 2,      // unreadable/empty input, unwritable output, corrupt index
    kExitVerify = 3,  // verification found a mismatch
};

// Entry point of the `ilpq` tool. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ilpq::tools

#endif  // ILPQ_TOOLS_COMMANDS_HPP
