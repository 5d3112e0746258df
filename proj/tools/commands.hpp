#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fibercalc::cli {

// Runs one fibercalc invocation. args excludes the program name. Returns
// the process exit code: 0 ok, 2 parse, 3 domain invariant,
// 4 usage/feasibility, 5 internal verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibercalc::cli
