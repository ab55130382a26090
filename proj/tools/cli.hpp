#ifndef CPPFORGE_TOOLS_CLI_HPP
#define CPPFORGE_TOOLS_CLI_HPP

#include <iosfwd>

namespace cppforge::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

// Runs the command line and returns the process exit code. The JSON report
// goes to --out, or to `out` when no path is given; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cppforge::cli

#endif  // CPPFORGE_TOOLS_CLI_HPP
