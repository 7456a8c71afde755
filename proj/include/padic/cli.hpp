#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace padic::cli {

/// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kClaimFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInsufficientPrecision = 3;

/// Runs one invocation; args excludes the program name. Reports go to `out`
/// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padic::cli
