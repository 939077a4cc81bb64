#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thompson::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 on parse/validation failure, 2 for an unknown command.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace thompson::cli
