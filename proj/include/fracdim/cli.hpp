#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fracdim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the `fracdim` executable. `args` excludes the program
/// name. Subcommands: simulate, dims, bounds, experiment.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fracdim::cli
