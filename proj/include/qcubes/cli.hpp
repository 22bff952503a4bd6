#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qcubes/identities.hpp"

namespace qcubes::cli {

/// Parses `name=lo..hi` (inclusive). Throws InvalidParams when malformed.
ParamRange parse_range(const std::string& text);

/// Runs one command line (without the program name). Returns the exit
/// status: 0 success, 1 a verification did not pass, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcubes::cli
