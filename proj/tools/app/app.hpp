#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace crossint::app {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kBudgetExhausted = 3,
};

/// Runs one command line (without the program name), writing reports to
/// `out` or the requested file and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crossint::app
