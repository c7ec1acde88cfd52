#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arrayldpc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerification = 3;

/// Runs one command line (without the program name), writing machine output
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arrayldpc::cli
