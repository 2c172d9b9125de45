#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quiverlab {

// The quiverlab command line without the program name.  Exit codes: 0 ok,
// 1 domain error, 2 usage error.  Messages go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quiverlab
