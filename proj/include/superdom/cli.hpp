#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superdom {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Rank cap from SUPERDOM_MAX_RANK (default 8). Throws Error on a malformed value.
unsigned max_rank_from_env();

/// The `superdom` command line without the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superdom
