#ifndef SAC_CLI_HPP
#define SAC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sac {

// Exit codes: 0 success/equal, 1 unequal, 2 graph-equal-only, 3 type error,
// 4 syntax error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sac

#endif
