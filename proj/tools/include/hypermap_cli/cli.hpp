#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypermap::cli {

/// Exit codes: 0 success, 1 a check failed (or a computation error), 2 bad
/// arguments. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypermap::cli
