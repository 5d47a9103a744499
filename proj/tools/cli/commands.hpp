#pragma once

#include <iosfwd>

namespace rwnet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

/// Entry point of the `rwnet` tool: generate, measure, sweep, plotdata.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rwnet::cli
