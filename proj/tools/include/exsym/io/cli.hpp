#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace exsym::cli {

/// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kParseError = 2;

/// Runs the command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace exsym::cli
