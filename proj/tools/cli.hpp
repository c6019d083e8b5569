#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace emext::cli {

enum ExitCode : int {
    ok = 0,
    failure = 1,
    validation = 2,
    nonfinite = 3,
    disagreement = 4,
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace emext::cli
