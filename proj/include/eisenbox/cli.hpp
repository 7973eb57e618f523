#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eisenbox {

/// Runs one eisenbox command. `args` excludes the program name. Results go
/// to `out`; diagnostics go to `err` as a JSON error object. Returns 0 on
/// success, 2 on an input error and 3 on a mathematical failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eisenbox
