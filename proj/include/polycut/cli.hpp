#pragma once

#include <iosfwd>

namespace polycut {

// Exit codes: 0 all checks pass, 1 a verification failed, 2 usage error.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace polycut
