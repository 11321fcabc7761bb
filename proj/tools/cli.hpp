#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isodim::cli {

/// Exit codes.
inline constexpr int kSuccess = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line (`args` excludes the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isodim::cli
