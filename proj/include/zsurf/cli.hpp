#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zsurf {

// Dispatch a full command line (without argv[0]); returns the process
// exit code: 0 success, 1 check failure, 2 malformed input.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace zsurf
