#ifndef SPINFACTOR_CLI_HPP
#define SPINFACTOR_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace spinfactor {

// Exit codes: 0 success / all identities pass, 1 verification failure
// (report still emitted), 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinfactor

#endif
