#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace skl::cli {

// Runs one CLI invocation; args exclude the program name. Exit codes:
// 0 success, 1 verification failure, 2 input error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace skl::cli
