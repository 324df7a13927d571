#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace galmeas {

// Runs the command line in-process: report on `out`, diagnostics on `err`.
// Exit codes: 0 success, 2 validation failure, 3 resource cap, 64 usage.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace galmeas
