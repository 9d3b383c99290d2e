#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilhoro::cli {

/// Entry point behind the binary. args is argv-style, program name included.
/// Returns the process exit code: 0 success or suite pass, 1 verification
/// failure, 2 usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace nilhoro::cli
