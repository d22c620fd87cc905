#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nonrep::cli
{
    /// Runs one invocation; args[0] is the program name. Returns the process exit code:
    /// 0 success or clean, 1 bad input, 2 witness or violated property, 3 unknown or
    /// budget exhausted.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
