#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace siltlab {

// Exit codes: 0 success, 1 error, 2 enumeration hit its budget.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace siltlab
