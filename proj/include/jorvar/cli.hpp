#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jorvar {

// Exit codes: 0 = verification passed, 1 = verification failed,
// 2 = usage/parse error, 3 = internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace jorvar
