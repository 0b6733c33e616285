#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace expdist::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailures = 1;
inline constexpr int kExitSpecError = 2;
inline constexpr int kExitSingular = 3;
inline constexpr int kExitUsage = 64;

/// Runs `expdist` with `args` (args[0] is the program name). Results go to
/// `out`, diagnostics (always starting with an error name) go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace expdist::cli
