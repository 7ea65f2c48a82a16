#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cluster::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2 };

/// Entry point shared by the executable and the tests. JSON goes to `out`
/// unless an --out file is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cluster::cli
