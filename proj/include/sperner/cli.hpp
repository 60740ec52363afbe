#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sperner::cli {

/// Environment variable holding the default for --jobs.
inline constexpr const char* kJobsEnv = "SPERNER_FORGE_JOBS";

/// Runs the command line `args` (without the program name). Returns 0 for a
/// passing certificate or a finished report, 1 for a failing certificate and
/// 2 for usage, input or IO errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sperner::cli
