#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mss {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotFound = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvalidInput = 3;
inline constexpr int kExitVerifyFailed = 4;

// Runs one command line (without the program name). FILE arguments of "-"
// read from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace mss
