#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shadowbound {

// Full command-line front end.  `args` excludes the program name.  Returns the
// process exit status: 0 success, 1 verification/internal failure, 2 argument
// error.  All report output goes to `out`, diagnostics and progress to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shadowbound
