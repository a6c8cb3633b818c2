#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace twyang {

/// Exit codes of `run`.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (program name excluded). Subcommands: check-ybe, check-relations, fusion, duality,
/// irreducible, scan. Returns 0 when every requested check passes, 1 on a failed check, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twyang
