#pragma once

#include <ostream>

namespace sft::cli {

// Process exit codes.
inline constexpr int kNonempty = 0;
inline constexpr int kEmpty = 1;
inline constexpr int kUnknown = 2;
inline constexpr int kUsage = 64;
inline constexpr int kFormat = 65;
inline constexpr int kBudget = 70;

// Runs one subcommand.  Results go to `out` (or the -o file), diagnostics
// to `err`.  The node budget defaults to $SFT_BUDGET when set.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sft::cli
