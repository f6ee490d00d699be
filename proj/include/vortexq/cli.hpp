#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vortexq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUnguaranteed = 2;

/// Runs the `vortexq` command line. `args` excludes the program name.
/// Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vortexq::cli
