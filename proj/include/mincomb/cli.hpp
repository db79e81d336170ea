#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mincomb {

// Exit codes: 0 success, 1 usage/parse/size error, 2 oracle failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mincomb
