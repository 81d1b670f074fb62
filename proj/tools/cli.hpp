#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arith::cli {

/// args excludes the program name. Errors go to err as one "error: ..." line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arith::cli
