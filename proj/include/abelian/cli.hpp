#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abelian::cli {

/// Exit codes: 0 success, 1 domain error (tag on stderr), 2 malformed input or usage.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace abelian::cli
