#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sombor {

// Full command-line driver, separated from main() so tests can invoke it
// in-process. `args` excludes the program name. Returns the process exit code:
// 0 success, 1 usage or domain error, 2 audit/verify found non-matching
// findings. Honors SOMBOR_FAMILY_FILE.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sombor
