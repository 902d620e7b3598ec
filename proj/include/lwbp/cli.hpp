#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lwbp {

/// Runs one `lwbp` invocation. `args` excludes the program name.
/// Returns 0 on success, 1 on bad input, 2 when `verify` finds a failing check.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lwbp
