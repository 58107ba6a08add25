#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace setalg::cli {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kSchemaId = "report-v1";

enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_usage = 2 };

/// One salg invocation; args[0] is the program name. Human output goes to
/// `out`, diagnostics to `err`; `--json <path>` also writes a RunReport.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace setalg::cli
