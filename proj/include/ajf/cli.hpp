#ifndef AJF_CLI_HPP
#define AJF_CLI_HPP

#include <ostream>

namespace ajf::cli {

// Exit codes: 0 success, 1 verification failure, 2 usage or precondition error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ajf::cli

#endif
