#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pnc {

// Dispatches one command line; returns the process exit status:
// 0 success, 1 domain error (JSON error object on stdout), 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace pnc
