#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace longwave::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `longwave` tool: subcommands run, sweep and validate.
/// Returns 0 on success, 2 on usage errors (nothing written), 1 on numerical
/// failure.
int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace longwave::cli
