#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pathforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIdentityFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Exit codes: 0 success, 1 an identity expected to
/// hold did not, 2 usage or input error, 3 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pathforge::cli
