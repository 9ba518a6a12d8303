#pragma once

#include <ostream>

namespace dalc::cli {

enum ExitCode : int { kOk = 0, kConfigError = 1, kMalformedInput = 2, kVerificationFailed = 3 };

// Entry point shared by the dalc executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dalc::cli
