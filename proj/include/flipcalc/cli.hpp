#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace flipcalc::cli {

/// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsageError = 2;

/// Runs one command. args excludes the program name. Colored PASS/FAIL
/// markers are written only when color is set.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            bool color = false);

}  // namespace flipcalc::cli
