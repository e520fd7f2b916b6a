#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"

namespace ztau::cli {

/// Runs the ztau command line with args[0] the program name. Reports go to
/// --output or `out`; usage text goes to `err`. Returns 0 on success, 1 on a
/// library error and 2 on a usage error, writing an error report in both
/// failure cases.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const EnvLookup& env = system_environment);

}  // namespace ztau::cli
