#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ec::cli {

// Exit codes: 0 success, 1 computation error or failed recipe, 2 parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ec::cli
