#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace snake::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kInvalidInput = 2,
    kNumericalFailure = 3,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace snake::cli
