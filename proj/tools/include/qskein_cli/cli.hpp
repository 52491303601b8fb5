#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qskein::cli {

inline constexpr const char* kFormatVersion = "1";

enum ExitCode { kSuccess = 0, kFailure = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name). `default_format`
/// stands in for QSKEIN_FORMAT. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> default_format = std::nullopt);

}  // namespace qskein::cli
