#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ctmp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Command-line entry point: preprocess, query and bench subcommands.
/// Usage errors return 2, runtime errors return 1 with the error name on err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ctmp
