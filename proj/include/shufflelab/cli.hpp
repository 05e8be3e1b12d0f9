#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shufflelab {

/// Entry point shared by the binary and the tests. `args` excludes argv[0].
/// Returns 0 (verified / success), 1 (identity failure), 2 (usage error).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shufflelab
