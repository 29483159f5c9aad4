#pragma once

#include <ostream>

namespace cmphi::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailure = 1;
inline constexpr int kUsageError = 2;

/// Runs the command line; output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cmphi::cli
