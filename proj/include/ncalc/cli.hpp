#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncalc::cli {

/// Runs one CLI command. `args` is argv without the program name. Writes the
/// command output to `out` (or to --output), diagnostics to `err`.
/// Exit code: 0 success, 1 domain/validation failure, 2 usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ncalc::cli
