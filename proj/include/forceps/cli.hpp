#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace forceps::cli {

/// Exit codes: 0 success, 1 usage or operational error, 2 a checked claim failed.
inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;
inline constexpr int exit_finding = 2;

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace forceps::cli
