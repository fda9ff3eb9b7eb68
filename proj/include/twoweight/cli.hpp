#pragma once

#include <ostream>

namespace twoweight {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitUndecided = 3;

/// Entry point of the command line tool: verify, screen, search, hjelmslev, gray-check.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twoweight
