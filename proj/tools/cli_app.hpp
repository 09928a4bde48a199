#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sdual {

/// Full command-line driver; args excludes the program name.
/// Returns the process exit code: 0 success, 1 domain/usage error,
/// 2 resource limit, 3 internal assertion failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdual
