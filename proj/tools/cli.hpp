#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gralg::cli {

enum ExitCode { ok = 0, check_failed = 1, usage_error = 2, resource_limit = 3 };

// Runs one command line; args excludes the program name. Errors are written to err as one JSON line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gralg::cli
