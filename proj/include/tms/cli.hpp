#ifndef TMS_CLI_HPP
#define TMS_CLI_HPP

#include <ostream>
#include <span>
#include <string>

namespace tms::cli {

/// Exit codes: 0 success, 1 violation or failed assertion, 2 usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tms::cli

#endif  // TMS_CLI_HPP
