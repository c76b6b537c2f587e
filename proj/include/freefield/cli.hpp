#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace freefield::cli {

/// Exit codes: 0 all checks passed, 1 a verification failed, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace freefield::cli
