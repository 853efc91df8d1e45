#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace defect_robust::cli {

/// Runs one CLI invocation. Returns 0 on success, 1 on usage errors and 2 on
/// data errors. argv[0] is the program name.
int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace defect_robust::cli
