#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramal {

/// Parses argv-style arguments (program name excluded), runs one verb, and
/// streams the report. Returns the process exit code: 0 done, 2 negative
/// verdict or violation found, 1 operational error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ramal
