#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace opcert {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;            // success / certified
inline constexpr int kExitRefuted = 2;       // refuted / violation
inline constexpr int kExitInconclusive = 3;  // inconclusive verdict
inline constexpr int kExitUsage = 64;        // unknown subcommand / bad flags
inline constexpr int kExitInput = 65;        // unreadable or malformed input

/// Runs one CLI invocation. The report (a single JSON document) goes to out;
/// human-readable diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace opcert
