#pragma once

#include <string>
#include <vector>

namespace glearn {

// Exit codes: 0 success, 1 error, 2 missing input.
int run_subcommand(const std::vector<std::string>& args);

}  // namespace glearn
