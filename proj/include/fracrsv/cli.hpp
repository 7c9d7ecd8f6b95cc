#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fracrsv {

/// Exit codes: 0 success, 1 runtime failure, 2 usage or precondition error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_main(int argc, const char* const* argv);

}  // namespace fracrsv
