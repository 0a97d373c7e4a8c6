#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace recourse::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kRejectedInput = 1,
  kBoundViolated = 2,
  kInfeasible = 3,
  kUsage = 64,
};

/// Environment variable that supplies --seed when the flag is absent.
inline constexpr const char* kSeedEnv = "RECOURSE_SEED";

/// Runs the tool. `args` excludes the program name. Default input and output
/// are `in` and `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace recourse::cli
