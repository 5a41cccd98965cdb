#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace svdt::cli {

// Runs one CLI invocation (argv without the program name).  Reports go to
// out, diagnostics to err.  Exit code: 0 = success/pass, 1 = verified
// failure with witness, 2 = usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace svdt::cli
