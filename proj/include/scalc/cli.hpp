#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace scalc {

/// The `scalc` command line, without the program name. Machine output goes
/// to `out`, diagnostics to `err`. Returns 0 when the checked property
/// holds, 1 when it fails and 2 on usage, parse or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scalc
