#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace otto::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kNoWindow = 3 };

/// First line of every CSV the tool writes.
inline constexpr const char* kSchemaLine = "# otto-rel schema v1";

/// Shortest decimal string that round-trips to the same double.
std::string format_number(double x);

/// Runs one invocation. args excludes the program name. Normal output goes to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace otto::cli
