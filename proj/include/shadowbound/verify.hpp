#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shadowbound {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Self-contained invariant battery behind `verify all`.  `max_n` caps the
// exhaustive-search checks (oracle range is 8 for graphs, 6 for families);
// everything else runs at fixed sizes.  Progress lines go to `log` if given.
std::vector<CheckResult> run_verification(int max_n, std::ostream* log = nullptr);

}  // namespace shadowbound
