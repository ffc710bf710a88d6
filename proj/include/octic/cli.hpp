#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace octic {

// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;       // unreadable input or bad usage
inline constexpr int kExitValidation = 3;  // descriptor/plane-list invalid
inline constexpr int kExitViolation = 4;   // arrangement outside hypotheses
inline constexpr int kExitLedger = 5;      // internal bookkeeping failure

/// Runs one CLI invocation. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace octic
