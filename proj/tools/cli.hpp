#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace germlab::cli {

enum ExitCode : int { ok = 0, parse_error = 1, degenerate = 2, verification_failed = 3, internal_error = 4 };

inline constexpr int json_schema_version = 1;

/// Runs one command. args excludes the program name. JSON goes to out,
/// tables and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace germlab::cli
