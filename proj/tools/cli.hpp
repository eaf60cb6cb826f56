#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mclain::cli {

/// Runs one invocation. Exit status: 0 success, 1 domain failure (invalid
/// relation, subset not closed or normal, failed demonstration), 2 usage or
/// parse error, 3 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mclain::cli
