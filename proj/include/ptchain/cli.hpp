#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptchain {

// Entry point shared by the executable and the tests. args excludes the
// program name. Returns the process exit code: 0 success, 1 failed
// verification, 2 error (reported as a JSON object on err).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptchain
