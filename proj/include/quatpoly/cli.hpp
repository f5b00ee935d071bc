#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qp::cli {

/// Command-line entry point: build | verify | export | project.
/// Exit codes: 0 success, 1 verification failure, 2 usage/input error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qp::cli
