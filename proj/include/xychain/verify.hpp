#pragma once

#include <ostream>
#include <string>

namespace xychain {

struct VerifyOutcome {
    int passed = 0;
    bool ok = true;
    std::string failure;  // description of the first violated check
};

/// Runs the oracle and invariant suite, printing one line per check. Stops at
/// the first violation.
VerifyOutcome run_verification(std::ostream& log);

} // namespace xychain
