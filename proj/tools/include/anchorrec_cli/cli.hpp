#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace anchorrec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name).
/// Returns 0 on success, 1 when a checked property fails, 2 on usage errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "20", "20,24,28" or "20:32:4" (first:last:step). Throws std::invalid_argument.
std::vector<int> parse_n_list(const std::string& text);

}  // namespace anchorrec::cli
