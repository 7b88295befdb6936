#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace curlie {

/// Runs the command-line driver on `args` (program name excluded) and
/// returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curlie
