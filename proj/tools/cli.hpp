#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hbasis::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,  // basis check failed, or search not proven optimal
  kInvalidParameters = 2,   // bad or infeasible parameters
  kGuardTripped = 3,        // overflow, size guard, or exhausted budget
};

inline constexpr const char* kToolVersion = "1.0.0";

// Runs one invocation. args excludes the program name. Data goes to `out`
// (or to --emit FILE), diagnostics and wall time to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hbasis::cli
