#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quasisym {

/// Runs the command-line front end. `args` excludes the program name.
/// Returns 0 on success, 1 when a check or verification fails, 2 on bad
/// input (unknown subcommand, malformed file, ...).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace quasisym
