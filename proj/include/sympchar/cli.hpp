#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sympchar::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid_arguments = 2;
inline constexpr int exit_consistency_failure = 3;

/// Runs one command. `args[0]` is the program name, as in argv.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sympchar::cli
