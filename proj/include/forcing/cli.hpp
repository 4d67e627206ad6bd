#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace forcing::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitResourceLimit = 3;

/// Runs one subcommand. `args` excludes the program name. JSON goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace forcing::cli
