#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specials {

// Subcommands: hj, dualgraph, fundcycle, quiver, ext1, syzygy, freeexp,
// classify, batch, verify-fixtures.
// Exit codes: 0 success, 1 validation/usage error, 2 check failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace specials
