#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace paralift::cli {

// Dispatch one invocation. args excludes the program name. Exit code 0 on
// success/pass, 1 on a verification mismatch, 2 on usage or input errors.
int run_command(std::vector<std::string> args, std::ostream& out,
                std::ostream& err);

// As above, writing to stdout/stderr; argv[0] is skipped.
int run_command(int argc, const char* const* argv);

} // namespace paralift::cli
