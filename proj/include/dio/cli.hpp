#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dio::cli {

// Runs the command-line front end. Returns the process exit status:
// 0 on success (including empty solution sets), 1 on usage/parse errors or
// oracle disagreement, 2 on overflow/cap errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace dio::cli
