#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidtrace {

/// Parses args (program name excluded) and runs one command, writing results
/// to out and problems to err. Returns the process exit status: 0 success,
/// 1 computation-domain error, 2 usage error, 3 verification failure.
/// Output bytes are a function of the arguments alone.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace braidtrace
