#pragma once

#include <iosfwd>

namespace birch::cli {

/// Exit codes: 0 success, 1 property violation, 2 usage or input error.
enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2 };

/// Environment variable holding the default campaign worker count.
inline constexpr const char* kWorkersEnv = "BIRCH_WORKERS";

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace birch::cli
