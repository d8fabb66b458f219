#pragma once

#include <ostream>

namespace holo {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMathFailure = 1;  ///< counterexample, no solution, failed check
inline constexpr int kExitUsage = 2;        ///< bad arguments or malformed input

/// Entry point of the holoreduce tool, with injectable streams for tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace holo
