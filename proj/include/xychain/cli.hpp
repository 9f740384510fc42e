#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace xychain::cli {

enum ExitStatus : int {
    kSuccess = 0,
    kValidationError = 1,
    kVerificationFailure = 2,
    kNumericError = 3,
};

/// Parses args (without the program name) and dispatches to a subcommand.
/// Tables go to --output when given, otherwise to out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace xychain::cli
