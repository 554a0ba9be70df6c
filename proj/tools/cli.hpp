#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgp::cli {

// Exit status shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `sgp` command line. Machine output goes to `out`, diagnostics to
/// `err`. The genus cap is read from SGP_GENUS_CAP when set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgp::cli
