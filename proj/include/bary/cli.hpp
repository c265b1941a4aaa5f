#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bary {

/// Runs the command-line tool on the given arguments (program name excluded),
/// writing reports to `out` and diagnostics to `err`.
///
/// Exit codes: 0 success, 1 verification failure, 2 usage error,
/// 3 degenerate geometry.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bary
