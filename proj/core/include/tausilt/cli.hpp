#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tausilt {

// Command dispatch. Exit codes: 0 all checks pass; 1 a theorem check failed
// (witness printed); 2 usage or parse error; 3 budget exhausted where
// finiteness was required.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tausilt
